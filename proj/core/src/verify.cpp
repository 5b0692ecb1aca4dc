#include "stern/verify.hpp"

#include <json.hpp>
#include <random>

#include "stern/analysis.hpp"
#include "stern/automata.hpp"
#include "stern/sigma.hpp"
#include "stern/tau.hpp"
#include "stern/tilings.hpp"

namespace stern {

namespace {

using Checks = std::vector<CheckResult>;

void add(Checks& out, std::string name, bool ok, std::string detail = {}) {
    out.push_back({std::move(name), ok, std::move(detail)});
}

struct Rng {
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    Value value(const Ring& r) { return static_cast<Value>(gen() % r.modulus()); }
    int below(int n) { return static_cast<int>(gen() % static_cast<std::uint64_t>(n)); }
    TriTile tile(const Ring& r, Orientation o) { return {o, {value(r), value(r), value(r)}}; }
    std::mt19937_64 gen;
};

TriTile tile_sum(const Ring& r, const TriTile& a, const TriTile& b) {
    return {a.orientation, {r.add(a.x(), b.x()), r.add(a.y(), b.y()), r.add(a.z(), b.z())}};
}

void matrices(const Ring& r, Checks& out) {
    const std::uint64_t p = r.modulus();
    const Mat3 A = letter_matrix(r, Letter::alpha), B = letter_matrix(r, Letter::beta),
               C = letter_matrix(r, Letter::gamma), D = letter_matrix(r, Letter::delta);
    const Mat3 I3 = Mat3::identity();
    add(out, "det A = 2", mat_det(r, A) == r.reduce(2), std::to_string(mat_det(r, A)));
    add(out, "det B = det C = det D = 1", mat_det(r, B) == 1 && mat_det(r, C) == 1 && mat_det(r, D) == 1);
    add(out, "B^p = C^p = D^p = I", mat_pow(r, B, p) == I3 && mat_pow(r, C, p) == I3 && mat_pow(r, D, p) == I3);
    add(out, "L^p = I", mat_pow(r, l_matrix(r), p) == Mat2::identity());
    const int h = self_similarity_period(r);
    add(out, "A^(2h) = I", mat_pow(r, A, 2 * static_cast<std::uint64_t>(h)) == I3, "h = " + std::to_string(h));
    bool inverses = true;
    for (const Mat3& m : {A, B, C, D}) inverses = inverses && mat_mul(r, mat_inv(r, m), m) == I3;
    for (const Mat2& m : {l_matrix(r), r_matrix(r)}) inverses = inverses && mat_mul(r, mat_inv(r, m), m) == Mat2::identity();
    add(out, "inverse times matrix = I for A, B, C, D, L, R", inverses);
}

void additivity(const Ring& r, Checks& out) {
    Rng rng(0x5eed0001 + r.modulus());
    bool sigma_ok = true, s_ok = true, h_ok = true, tau_ok = true, scale_ok = true;
    for (int n = 0; n < 100; ++n) {
        const Orientation o = rng.below(2) ? Orientation::up : Orientation::down;
        const TriTile a = rng.tile(r, o), b = rng.tile(r, o);
        const int k = rng.below(6);
        const Value c = rng.value(r);
        sigma_ok = sigma_ok && patch_add(supertile(r, a, k), supertile(r, b, k)) == supertile(r, tile_sum(r, a, b), k);
        const TriTile ca{o, {r.mul(c, a.x()), r.mul(c, a.y()), r.mul(c, a.z())}};
        scale_ok = scale_ok && patch_scale(c, supertile(r, a, k)) == supertile(r, ca, k);
        s_ok = s_ok && patch_add(s_patch(r, a, k), s_patch(r, b, k)) == s_patch(r, tile_sum(r, a, b), k);
        const SegTile u{rng.value(r), rng.value(r)}, v{rng.value(r), rng.value(r)};
        const SegPatch tu = tau_word(r, u, k), tv = tau_word(r, v, k),
                       tuv = tau_word(r, {r.add(u.x, v.x), r.add(u.y, v.y)}, k);
        for (std::size_t q = 0; q < tu.values.size(); ++q)
            tau_ok = tau_ok && r.add(tu.values[q], tv.values[q]) == tuv.values[q];
    }
    const int hk = r.modulus() <= 7 ? 1 : 0;
    for (int n = 0; n < 20; ++n) {
        const Value b1 = rng.value(r), b2 = rng.value(r);
        Value c1 = rng.value(r), c2 = rng.value(r);
        if (c1 == 0) c1 = 1;
        if (c2 == 0 || r.add(c1, c2) == 0) c2 = c1;
        h_ok = h_ok && patch_add(h_patch(r, b1, c1, hk), h_patch(r, b2, c2, hk)) ==
                           h_patch(r, r.add(b1, b2), r.add(c1, c2), hk);
    }
    add(out, "supertile(t) + supertile(t') = supertile(t + t')", sigma_ok);
    add(out, "c * supertile(t) = supertile(c t)", scale_ok);
    add(out, "s_t + s_t' = s_(t+t')", s_ok);
    add(out, "h_{b,c} + h_{b',c'} = h_{b+b',c+c'}", h_ok);
    add(out, "tau^k(t) + tau^k(t') = tau^k(t + t')", tau_ok);
    if (r.modulus() == 3)
        add(out, "sigma^2(up 110) + sigma^2(up 021) = sigma^2(up 101)",
            patch_add(supertile(r, up_tile(1, 1, 0), 2), supertile(r, up_tile(0, 2, 1), 2)) ==
                supertile(r, up_tile(1, 0, 1), 2));
    if (r.modulus() == 5) {
        add(out, "2 * sigma^2(up 123) = sigma^2(up 241)",
            patch_scale(2, supertile(r, up_tile(1, 2, 3), 2)) == supertile(r, up_tile(2, 4, 1), 2));
        const SegPatch a = tau_word(r, {1, 2}, 3), b = tau_word(r, {0, 3}, 3), c = tau_word(r, {1, 0}, 3);
        bool ok = true;
        for (std::size_t q = 0; q < a.values.size(); ++q) ok = ok && r.add(a.values[q], b.values[q]) == c.values[q];
        add(out, "tau^3(12) + tau^3(03) = tau^3(10)", ok);
    }
}

void automata(const Ring& r, Checks& out) {
    const MachineM M(r);
    const TriTile anchor = up_tile(0, 2, 1);
    bool m_ok = true;
    std::size_t cases = 0;
    for (int k = 0; k <= 5; ++k) {
        const TriPatch s = s_patch(r, anchor, k);
        for (std::uint64_t n = 0; n < (1ULL << (2 * k)); ++n) {
            PositionWord w = decode_word(n, k, WordConvention::plane);
            const TriTile expect = lookup_tile(s, w);
            m_ok = m_ok && M.decode(M.run(w), anchor) == expect;
            w.insert(w.begin(), 2, Letter::alpha);
            m_ok = m_ok && M.decode(M.run(w), anchor) == expect;
            ++cases;
        }
    }
    add(out, "automaton M matches s_t(k), k <= 5", m_ok, std::to_string(cases) + " words");

    const MachineN N(r);
    const int L = static_cast<int>(r.modulus());
    bool n_ok = true;
    Rng rng(0x5eed0002);
    for (int trial = 0; trial < 3; ++trial) {
        const Value b = rng.value(r);
        const Value c = static_cast<Value>(1 + rng.below(static_cast<int>(r.modulus()) - 1));
        const TriPatch h = h_patch(r, b, c, 1);
        for (int sector = 0; sector < 6; ++sector)
            for (int n = 0; n < 64; ++n) {
                const PositionWord w = decode_word(rng.gen() % (1ULL << (2 * L)), L, WordConvention::sector);
                n_ok = n_ok && N.decode(N.run(w), b, c, sector) == h_lookup(h, sector, w);
            }
    }
    add(out, "automaton N matches h_{b,c}(1) in all sectors", n_ok);

    const MachineO O(r);
    bool o_ok = true;
    for (Value y = 1; y < r.modulus(); ++y)
        for (std::uint64_t n = 0; n < (1U << 12); ++n) {
            const auto [f0, f1] = fusc_pair(n);
            const SegTile expect{r.mul(y, r.reduce(static_cast<std::int64_t>(f0 % r.modulus()))),
                                 r.mul(y, r.reduce(static_cast<std::int64_t>(f1 % r.modulus())))};
            o_ok = o_ok && O.decode_v(O.run(binary_word(n, 12)), y) == expect;
        }
    add(out, "automaton O matches y * (fusc n, fusc n+1)", o_ok);

    if (r.modulus() <= 5) {
        const auto qm = reachable_state_count(MachineId::M, r), qn = reachable_state_count(MachineId::N, r),
                   qo = reachable_state_count(MachineId::O, r);
        add(out, "reachable state sets are finite", true,
            "M " + std::to_string(qm) + ", N " + std::to_string(qn) + ", O " + std::to_string(qo));
    }
}

void zeros(const Ring& r, Checks& out) {
    for (const LemmaResult& l : check_zero_lemmas(r, 4))
        add(out, l.name, l.passed(),
            std::to_string(l.cases) + " cases" + (l.passed() ? "" : ", first failure " + l.first_violation));
}

void reachability(const Ring& r, Checks& out) {
    const ReachabilityTable table(r);
    add(out, "reachability table is total over T*", table.total(), std::to_string(table.tiles().size()) + " tiles");
    if (!table.total()) return;
    const Primitivity prim = primitivity_exponent(table);
    add(out, "primitivity exponent", prim.exponent() >= 1,
        "m = " + std::to_string(prim.m) + ", n = " + std::to_string(prim.n));
    Rng rng(0x5eed0003);
    bool ok = true;
    for (int n = 0; n < 10; ++n) {
        const TriTile& a = table.tiles()[static_cast<std::size_t>(rng.below(static_cast<int>(table.tiles().size())))];
        const TriTile& b = table.tiles()[static_cast<std::size_t>(rng.below(static_cast<int>(table.tiles().size())))];
        ok = ok && occurs_in(r, a, b, prim.exponent());
    }
    add(out, "sampled pairs occur at the primitivity exponent", ok);
}

void nonperiodicity(const Ring& r, Checks& out) {
    for (const Witness& w : nonperiodicity_witnesses(r, r.modulus() <= 5 ? 1 : 0))
        add(out, w.name + " (step " + std::to_string(w.step) + ")", w.found, w.detail);
}

void symmetry(const Ring& r, Checks& out) {
    Rng rng(0x5eed0004);
    bool rot = true, mirror = true, odd = true;
    for (int n = 0; n < 20; ++n) {
        const Orientation o = rng.below(2) ? Orientation::up : Orientation::down;
        const Value x = rng.value(r), y = rng.value(r), c = rng.value(r);
        const int k = 1 + rng.below(4);
        rot = rot && (detect_symmetries(supertile(r, {o, {x, x, x}}, k)) & (sym_rot3 | sym_mirror)) ==
                         (sym_rot3 | sym_mirror);
        mirror = mirror && (detect_symmetries(supertile(r, {o, {x, y, x}}, k)) & sym_mirror);
        odd = odd && (detect_symmetries(supertile(r, {o, {c, 0, r.neg(c)}}, k)) & sym_odd_mirror);
    }
    add(out, "x = y = z gives mirror and rot3", rot);
    add(out, "x = z gives mirror", mirror);
    add(out, "(c, 0, -c) gives odd mirror", odd);
    const SymmetrySet h = detect_symmetries(h_patch(r, 2, 1, 1));
    add(out, "h_{2,1}(1) has mirror and rot6", (h & (sym_mirror | sym_rot6)) == (sym_mirror | sym_rot6),
        to_string_symmetries(h));
}

using SuiteFn = void (*)(const Ring&, Checks&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> s{
        {"matrices", matrices}, {"additivity", additivity},         {"automata", automata}, {"zeros", zeros},
        {"reachability", reachability}, {"nonperiodicity", nonperiodicity}, {"symmetry", symmetry}};
    return s;
}

}  // namespace

bool SuiteReport::passed() const noexcept {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

std::string SuiteReport::to_json() const {
    nlohmann::json doc{{"suite", suite}, {"modulus", modulus}, {"passed", passed()}, {"checks", nlohmann::json::array()}};
    for (const auto& c : checks) doc["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return doc.dump(2);
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& s : suites()) n.push_back(s.first);
        n.push_back("all");
        return n;
    }();
    return names;
}

SuiteReport run_suite(std::string_view name, const Ring& ring) {
    ring.require_odd_prime("verify");
    SuiteReport report{std::string(name), ring.modulus(), {}};
    bool known = false;
    for (const auto& [suite, fn] : suites()) {
        if (name != "all" && name != suite) continue;
        known = true;
        if (suite == "reachability" && ring.modulus() > 7) {
            report.checks.push_back({"reachability", false, "capped at p <= 7"});
            continue;
        }
        Checks checks;
        fn(ring, checks);
        for (auto& c : checks) {
            if (name == "all") c.name = suite + ": " + c.name;
            report.checks.push_back(std::move(c));
        }
    }
    if (!known) throw Error(ErrorKind::invalid_argument, "unknown check suite \"" + std::string(name) + "\"");
    return report;
}

}  // namespace stern
