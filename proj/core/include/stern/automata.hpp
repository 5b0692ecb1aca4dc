#pragma once

#include <cstdint>
#include <string_view>

#include "stern/lattice.hpp"
#include "stern/ring.hpp"
#include "stern/sigma.hpp"
#include "stern/tau.hpp"

namespace stern {

enum class MachineId : std::uint8_t { M, N, O };

MachineId parse_machine(std::string_view name);

template <std::size_t N>
struct State {
    int sign = 1;
    Mat<N> m = Mat<N>::identity();

    friend bool operator==(const State&, const State&) = default;
    friend bool operator<(const State& a, const State& b) noexcept {
        if (a.sign != b.sign) return a.sign < b.sign;
        return a.m.e < b.m.e;
    }
};

using TriState = State<3>;
using SegState = State<2>;

// Random access into S_t. After reading w: m = A^{-|w|} [w], and
// sign = +1 iff the tile has the anchor's orientation.
class MachineM {
public:
    explicit MachineM(const Ring& ring);

    TriState initial() const noexcept { return {}; }
    TriState step(const TriState& q, Letter l) const;
    TriState run(const PositionWord& w) const;
    // [t'] = [anchor] m.
    TriTile decode(const TriState& q, const TriTile& anchor) const;

private:
    Ring ring_;
    Mat3 a_inv_;
    Mat3 letter_[4];
};

// Random access into H_{b,c}, sector convention. After reading w:
// m = B^{-|w|} [w], sign = +1 iff the sector-0 tile points up.
class MachineN {
public:
    explicit MachineN(const Ring& ring);

    TriState initial() const noexcept { return {}; }
    TriState step(const TriState& q, Letter l) const;
    TriState run(const PositionWord& w) const;
    // Sector 0 tile is [c b b] m; sector r applies the cyclic shift r times.
    TriTile decode(const TriState& q, Value b, Value c, int sector) const;

private:
    Ring ring_;
    Mat3 b_inv_;
    Mat3 letter_[4];
};

// Random access into V_y and W_t. After reading w: m = L^{-|w|} [w].
class MachineO {
public:
    explicit MachineO(const Ring& ring);

    SegState initial() const noexcept { return {}; }
    SegState step(const SegState& q, std::uint8_t bit) const;
    SegState run(const BinaryWord& w) const;
    SegTile decode_v(const SegState& q, Value y) const;
    SegTile decode_w(const SegState& q, const SegTile& anchor) const;

private:
    Ring ring_;
    Mat2 l_inv_, l_, r_;
};

// Rotate sector-0 corners into sector r: [x y z] -> [y z x] per step.
TriTile rotate_sector(const TriTile& t0, int sector);

// Size of the set of states reachable from the initial state.
std::size_t reachable_state_count(MachineId machine, const Ring& ring);

}  // namespace stern
