#include "stern/automata.hpp"

#include <deque>
#include <set>

namespace stern {

namespace {

void require_sector(int sector) {
    if (sector < 0 || sector > 5)
        throw Error(ErrorKind::invalid_sector, "sector must lie in [0, 5], got " + std::to_string(sector));
}

template <class Machine, class Q, class Symbols>
std::size_t closure(const Machine& machine, const Symbols& symbols, std::size_t bound) {
    std::set<Q> seen{machine.initial()};
    std::deque<Q> queue{machine.initial()};
    while (!queue.empty()) {
        const Q q = queue.front();
        queue.pop_front();
        for (auto s : symbols) {
            const Q next = machine.step(q, s);
            if (seen.insert(next).second) {
                if (seen.size() > bound)
                    throw Error(ErrorKind::search_exhausted, "reachable state set exceeds its theoretical bound");
                queue.push_back(next);
            }
        }
    }
    return seen.size();
}

}  // namespace

MachineId parse_machine(std::string_view name) {
    if (name == "M" || name == "m") return MachineId::M;
    if (name == "N" || name == "n") return MachineId::N;
    if (name == "O" || name == "o") return MachineId::O;
    throw Error(ErrorKind::invalid_argument, "unknown machine \"" + std::string(name) + "\"");
}

MachineM::MachineM(const Ring& ring) : ring_(ring) {
    ring.require_odd_prime("automaton M");
    for (Letter l : all_letters) letter_[static_cast<int>(l)] = letter_matrix(ring, l);
    a_inv_ = mat_inv(ring, letter_[0]);
}

TriState MachineM::step(const TriState& q, Letter l) const {
    const Mat3 m = mat_mul(ring_, mat_mul(ring_, a_inv_, q.m), letter_[static_cast<int>(l)]);
    return {l == Letter::alpha ? q.sign : -q.sign, m};
}

TriState MachineM::run(const PositionWord& w) const {
    TriState q = initial();
    for (Letter l : w) q = step(q, l);
    return q;
}

TriTile MachineM::decode(const TriState& q, const TriTile& anchor) const {
    return {q.sign > 0 ? anchor.orientation : flip(anchor.orientation), row_mul(ring_, anchor.corners, q.m)};
}

MachineN::MachineN(const Ring& ring) : ring_(ring) {
    ring.require_odd_prime("automaton N");
    for (Letter l : all_letters) letter_[static_cast<int>(l)] = letter_matrix(ring, l);
    b_inv_ = mat_inv(ring, letter_[1]);
}

TriState MachineN::step(const TriState& q, Letter l) const {
    const Mat3 m = mat_mul(ring_, mat_mul(ring_, b_inv_, q.m), letter_[static_cast<int>(l)]);
    return {l == Letter::alpha ? -q.sign : q.sign, m};
}

TriState MachineN::run(const PositionWord& w) const {
    TriState q = initial();
    for (Letter l : w) q = step(q, l);
    return q;
}

TriTile MachineN::decode(const TriState& q, Value b, Value c, int sector) const {
    require_sector(sector);
    b = ring_.reduce(b);
    c = ring_.reduce(c);
    if (c == 0) throw Error(ErrorKind::invalid_center, "H_{b,c} needs a nonzero centre value");
    const TriTile t0{q.sign > 0 ? Orientation::up : Orientation::down, row_mul(ring_, Row<3>{c, b, b}, q.m)};
    return rotate_sector(t0, sector);
}

TriTile rotate_sector(const TriTile& t0, int sector) {
    require_sector(sector);
    TriTile t = t0;
    for (int r = 0; r < sector; ++r) {
        t.corners = {t.corners[1], t.corners[2], t.corners[0]};
        t.orientation = flip(t.orientation);
    }
    return t;
}

MachineO::MachineO(const Ring& ring)
    : ring_(ring), l_inv_(mat_inv(ring, l_matrix(ring))), l_(l_matrix(ring)), r_(r_matrix(ring)) {}

SegState MachineO::step(const SegState& q, std::uint8_t bit) const {
    return {q.sign, mat_mul(ring_, mat_mul(ring_, l_inv_, q.m), bit ? r_ : l_)};
}

SegState MachineO::run(const BinaryWord& w) const {
    SegState q = initial();
    for (auto b : w) q = step(q, b);
    return q;
}

SegTile MachineO::decode_v(const SegState& q, Value y) const {
    const Row<2> row = row_mul(ring_, Row<2>{0, ring_.reduce(y)}, q.m);
    return {row[0], row[1]};
}

SegTile MachineO::decode_w(const SegState& q, const SegTile& anchor) const {
    const Row<2> row = row_mul(ring_, Row<2>{anchor.x, anchor.y}, q.m);
    return {row[0], row[1]};
}

std::size_t reachable_state_count(MachineId machine, const Ring& ring) {
    // |Q| <= 2 p^(n*n), saturated to stay representable.
    auto bound = [&](int entries) {
        std::uint64_t b = 2;
        for (int e = 0; e < entries && b < (1ULL << 40); ++e) b *= ring.modulus();
        return static_cast<std::size_t>(b);
    };
    switch (machine) {
        case MachineId::M: return closure<MachineM, TriState>(MachineM(ring), all_letters, bound(9));
        case MachineId::N: return closure<MachineN, TriState>(MachineN(ring), all_letters, bound(9));
        case MachineId::O: {
            const std::array<std::uint8_t, 2> bits{0, 1};
            return closure<MachineO, SegState>(MachineO(ring), bits, bound(4));
        }
    }
    return 0;
}

}  // namespace stern
