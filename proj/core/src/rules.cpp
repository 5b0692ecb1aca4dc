#include "stern/rules.hpp"

#include <map>
#include <mutex>
#include <unordered_map>

namespace stern {

namespace {

using Coef = std::array<std::int8_t, 4>;

Formula lin(Coef c) { return {Formula::Kind::linear, c}; }
Formula mono(Coef c) { return {Formula::Kind::monomial, c}; }

SubstRule midpoint_rule(RuleId id, Formula (*make)(Coef)) {
    SubstRule r{id, Geometry::triangle, 2, {}, {}};
    r.points = {{0, 0, make({1, 0, 0, 0})}, {2, 0, make({0, 1, 0, 0})}, {0, 2, make({0, 0, 1, 0})},
                {1, 0, make({1, 1, 0, 0})}, {0, 1, make({1, 0, 1, 0})}, {1, 1, make({0, 1, 1, 0})}};
    return r;
}

// Scale-3 triangle rules: corners, centre x+y+z, and on each edge (u, v) the
// point next to u holds near*u + far*v.
SubstRule thirds_rule(RuleId id, std::int8_t near, std::int8_t far) {
    auto edge = [&](int u, int v) {
        Coef c{};
        c[static_cast<std::size_t>(u)] = near;
        c[static_cast<std::size_t>(v)] = static_cast<std::int8_t>(c[static_cast<std::size_t>(v)] + far);
        return lin(c);
    };
    SubstRule r{id, Geometry::triangle, 3, {}, {}};
    r.points = {{0, 0, lin({1, 0, 0, 0})}, {3, 0, lin({0, 1, 0, 0})}, {0, 3, lin({0, 0, 1, 0})},
                {1, 1, lin({1, 1, 1, 0})}, {1, 0, edge(0, 1)},         {2, 0, edge(1, 0)},
                {0, 1, edge(0, 2)},        {0, 2, edge(2, 0)},         {2, 1, edge(1, 2)},
                {1, 2, edge(2, 1)}};
    return r;
}

SubstRule square_rule() {
    SubstRule r{RuleId::sigma6, Geometry::square, 3, {}, {}};
    // Coefficients over (w, x, y, z); rows listed top to bottom.
    const Coef table[4][4] = {
        {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 1, 0, 0}, {0, 1, 0, 0}},
        {{1, 0, 1, 0}, {1, 1, 1, 0}, {1, 1, 0, 1}, {0, 1, 0, 1}},
        {{1, 0, 1, 0}, {1, 0, 1, 1}, {0, 1, 1, 1}, {0, 1, 0, 1}},
        {{0, 0, 1, 0}, {0, 0, 1, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}},
    };
    for (int row = 0; row < 4; ++row)
        for (int a = 0; a < 4; ++a) r.points.push_back({a, 3 - row, lin(table[row][a])});
    return r;
}

SubstRule right_triangle_rule() {
    SubstRule r{RuleId::sigma7, Geometry::right_triangle, 2, {}, {}};
    r.points = {{0, 0, lin({1, 0, 0, 0})}, {4, 0, lin({0, 1, 0, 0})}, {2, 2, lin({0, 0, 1, 0})},
                {2, 0, lin({1, 1, 0, 0})}, {1, 1, lin({1, 0, 1, 0})}, {3, 1, lin({0, 1, 1, 0})}};
    r.children = {{0, 3, 4}, {3, 1, 5}, {3, 2, 4}, {2, 3, 5}};
    return r;
}

SubstRule build(RuleId id) {
    switch (id) {
        case RuleId::sigma: return midpoint_rule(id, lin);
        case RuleId::sigma1: return midpoint_rule(id, mono);
        case RuleId::sigma2: return thirds_rule(id, 1, 0);
        case RuleId::sigma3: return thirds_rule(id, 2, -1);
        case RuleId::sigma4: return thirds_rule(id, 2, 1);
        case RuleId::sigma5: return thirds_rule(id, 1, -1);
        case RuleId::sigma6: return square_rule();
        case RuleId::sigma7: return right_triangle_rule();
    }
    throw Error(ErrorKind::invalid_argument, "unknown rule");
}

// Symbolic value: exponent or coefficient vector over the glued configuration's corners.
using Sym = std::array<int, 9>;

Sym combine(const Formula& f, const Sym* corners, std::size_t count) {
    Sym out{};
    for (std::size_t s = 0; s < count; ++s)
        for (std::size_t v = 0; v < out.size(); ++v) out[v] += f.coef[s] * corners[s][v];
    return out;
}

Sym unit(std::size_t v) {
    Sym s{};
    s[v] = 1;
    return s;
}

[[noreturn]] void inconsistent(const SubstRule& rule, const std::string& where) {
    throw Error(ErrorKind::inconsistent_rule, std::string(to_string(rule.id)) + ": shared point " + where +
                                                  " receives two different formulas");
}

template <class Key, class T>
void put(std::map<Key, T>& m, const Key& k, const T& v, const SubstRule& rule, const std::string& where) {
    auto [it, fresh] = m.emplace(k, v);
    if (!fresh && it->second != v) inconsistent(rule, where);
}

std::string where(std::int64_t a, std::int64_t b) { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; }

// Refined point of a triangle tile. Down tiles take the half-turn of the up table.
Point tri_target(int s, int i, int j, Orientation local, int a, int b) noexcept {
    if (local == Orientation::up) return {s * i + a, s * j + b};
    return {s * (i + 1) - a, s * (j + 1) - b};
}

struct PairHash {
    std::size_t operator()(const std::array<std::int64_t, 2>& p) const noexcept {
        return std::hash<std::int64_t>{}(p[0] * 1000003 + p[1]);
    }
};

template <class T, class Eval>
void mesh_step(const SubstRule& rule, const std::vector<std::array<std::int64_t, 2>>& pts,
               const std::vector<T>& vals, const std::vector<std::array<std::uint32_t, 3>>& tris,
               std::vector<std::array<std::int64_t, 2>>& out_pts, std::vector<T>& out_vals,
               std::vector<std::array<std::uint32_t, 3>>& out_tris, Eval eval) {
    std::unordered_map<std::array<std::int64_t, 2>, std::uint32_t, PairHash> index;
    out_pts.clear();
    out_vals.clear();
    out_tris.clear();
    out_tris.reserve(tris.size() * rule.children.size());
    std::vector<std::uint32_t> local(rule.points.size());
    for (const auto& tri : tris) {
        const auto& X = pts[tri[0]];
        const auto& Y = pts[tri[1]];
        const auto& Z = pts[tri[2]];
        const T corners[3] = {vals[tri[0]], vals[tri[1]], vals[tri[2]]};
        for (std::size_t k = 0; k < rule.points.size(); ++k) {
            const PointRule& pr = rule.points[k];
            // Doubled coordinates; (a, b) = lambda*(4,0) + mu*(2,2).
            std::array<std::int64_t, 2> g{};
            for (std::size_t c = 0; c < 2; ++c)
                g[c] = 2 * X[c] + (2 * (Y[c] - X[c]) * (pr.a - pr.b)) / 4 + (2 * (Z[c] - X[c]) * pr.b) / 2;
            const T v = eval(pr.formula, corners);
            auto [it, fresh] = index.emplace(g, static_cast<std::uint32_t>(out_pts.size()));
            if (fresh) {
                out_pts.push_back(g);
                out_vals.push_back(v);
            } else if (out_vals[it->second] != v) {
                inconsistent(rule, where(g[0], g[1]));
            }
            local[k] = it->second;
        }
        for (const auto& ch : rule.children) out_tris.push_back({local[ch[0]], local[ch[1]], local[ch[2]]});
    }
}

}  // namespace

RuleId parse_rule(std::string_view name) {
    for (RuleId id : all_rules)
        if (to_string(id) == name) return id;
    throw Error(ErrorKind::invalid_argument, "unknown rule \"" + std::string(name) + "\"");
}

std::string_view to_string(RuleId id) noexcept {
    static constexpr std::string_view names[] = {"sigma",  "sigma1", "sigma2", "sigma3",
                                                  "sigma4", "sigma5", "sigma6", "sigma7"};
    return names[static_cast<int>(id)];
}

Value Formula::eval(const Ring& ring, const Value* corners, std::size_t count) const noexcept {
    if (kind == Kind::linear) {
        std::int64_t acc = 0;
        for (std::size_t s = 0; s < count; ++s) acc += std::int64_t{coef[s]} * corners[s];
        return ring.reduce(acc);
    }
    Value acc = ring.reduce(1);
    for (std::size_t s = 0; s < count; ++s)
        if (coef[s] != 0) acc = ring.mul(acc, ring.pow(corners[s], static_cast<std::uint64_t>(coef[s])));
    return acc;
}

std::string to_string(const Formula& f, std::string_view corner_names) {
    std::string s;
    for (std::size_t k = 0; k < corner_names.size() && k < f.coef.size(); ++k) {
        const int c = f.coef[k];
        if (c == 0) continue;
        if (f.kind == Formula::Kind::monomial) {
            s += corner_names[k];
            if (c > 1) s += "^" + std::to_string(c);
            continue;
        }
        if (c < 0) s += '-';
        else if (!s.empty()) s += '+';
        if (c != 1 && c != -1) s += std::to_string(c < 0 ? -c : c);
        s += corner_names[k];
    }
    return s.empty() ? (f.kind == Formula::Kind::monomial ? "1" : "0") : s;
}

bool SubstRule::additive() const noexcept {
    for (const auto& p : points)
        if (p.formula.kind != Formula::Kind::linear) return false;
    return true;
}

const Formula& SubstRule::formula_at(int a, int b) const {
    for (const auto& p : points)
        if (p.a == a && p.b == b) return p.formula;
    throw Error(ErrorKind::out_of_bounds, std::string(to_string(id)) + " has no point " + where(a, b));
}

const SubstRule& variant_rule(RuleId id) {
    static std::array<SubstRule, all_rules.size()> table;
    static std::once_flag once;
    std::call_once(once, [] {
        for (RuleId r : all_rules) {
            SubstRule rule = build(r);
            validate_rule(rule);
            table[static_cast<std::size_t>(r)] = std::move(rule);
        }
    });
    return table[static_cast<std::size_t>(id)];
}

void validate_rule(const SubstRule& rule) {
    const int s = rule.scale;
    switch (rule.geometry) {
        case Geometry::triangle: {
            for (const auto& p : rule.points)
                if (p.a < 0 || p.b < 0 || p.a + p.b > s) inconsistent(rule, where(p.a, p.b));
            // Six tiles around (0, 0); corners are symbolic variables.
            const Ring probe(65521);
            TriPatch hex = TriPatch::hex(probe, 1);
            std::map<Point, std::size_t> var;
            for (int j = -1; j <= 1; ++j)
                for (int i = hex.i_min(j); i <= hex.i_max(j); ++i) var.emplace(Point{i, j}, var.size());
            std::map<Point, Sym> seen;
            for_each_tile(hex, [&](int i, int j, Orientation local, const TriTile&) {
                const auto pts = tile_points(i, j, local);
                const Sym corners[3] = {unit(var.at(pts[0])), unit(var.at(pts[1])), unit(var.at(pts[2]))};
                for (const auto& p : rule.points) {
                    const Point q = tri_target(s, i, j, local, p.a, p.b);
                    put(seen, q, combine(p.formula, corners, 3), rule, where(q.i, q.j));
                }
            });
            if (seen.size() != static_cast<std::size_t>(3 * s * s + 3 * s + 1))
                inconsistent(rule, "(table does not cover every refined point)");
            break;
        }
        case Geometry::square: {
            std::map<Point, Sym> seen;
            auto var = [](int i, int j) { return unit(static_cast<std::size_t>(j * 3 + i)); };
            for (int j = 0; j < 2; ++j)
                for (int i = 0; i < 2; ++i) {
                    const Sym corners[4] = {var(i, j + 1), var(i + 1, j + 1), var(i, j), var(i + 1, j)};
                    for (const auto& p : rule.points) {
                        const Point q{s * i + p.a, s * j + p.b};
                        put(seen, q, combine(p.formula, corners, 4), rule, where(q.i, q.j));
                    }
                }
            if (seen.size() != static_cast<std::size_t>((2 * s + 1) * (2 * s + 1)))
                inconsistent(rule, "(table does not cover every refined point)");
            break;
        }
        case Geometry::right_triangle: {
            std::vector<std::array<std::int64_t, 2>> pts{{0, 0}, {2, 0}, {1, 1}}, p1, p2;
            std::vector<Sym> vals{unit(0), unit(1), unit(2)}, v1, v2;
            std::vector<std::array<std::uint32_t, 3>> tris{{0, 1, 2}}, t1, t2;
            auto eval = [](const Formula& f, const Sym* c) { return combine(f, c, 3); };
            mesh_step(rule, pts, vals, tris, p1, v1, t1, eval);
            mesh_step(rule, p1, v1, t1, p2, v2, t2, eval);
            break;
        }
    }
}

TriPatch refine_with(const SubstRule& rule, const TriPatch& patch) {
    if (rule.geometry != Geometry::triangle)
        throw Error(ErrorKind::shape_mismatch, std::string(to_string(rule.id)) + " does not act on equilateral triangles");
    const int s = rule.scale;
    const Ring& r = patch.ring();
    TriPatch out = patch.shape() == PatchShape::hex
                       ? TriPatch::hex(r, patch.side() * s, patch.order() + 1)
                       : TriPatch::triangle(r, patch.orientation(), patch.side() * s, patch.order() + 1);
    for (int j = patch.j_min(); j < patch.j_max(); ++j)
        for (int i = patch.i_min(j) - 1; i <= patch.i_max(j); ++i)
            for (Orientation local : {Orientation::up, Orientation::down}) {
                if (!has_tile(patch, i, j, local)) continue;
                const auto pts = tile_points(i, j, local);
                const Value corners[3] = {patch.get(pts[0].i, pts[0].j), patch.get(pts[1].i, pts[1].j),
                                          patch.get(pts[2].i, pts[2].j)};
                for (const auto& p : rule.points) {
                    const Point q = tri_target(s, i, j, local, p.a, p.b);
                    out.ref(q.i, q.j) = p.formula.eval(r, corners, 3);
                }
            }
    return out;
}

TriPatch supertile_with(const SubstRule& rule, const Ring& ring, const TriTile& t, int k) {
    if (k < 0) throw Error(ErrorKind::invalid_argument, "supertile order must be non-negative");
    TriPatch p = patch_of_tile(ring, t);
    for (int step = 0; step < k; ++step) {
        if (static_cast<std::int64_t>(p.side()) * rule.scale > 8192)
            throw Error(ErrorKind::invalid_argument, "supertile side would exceed 8192");
        p = refine_with(rule, p);
    }
    return p;
}

SquarePatch refine_square(const SubstRule& rule, const SquarePatch& patch) {
    if (rule.geometry != Geometry::square)
        throw Error(ErrorKind::shape_mismatch, std::string(to_string(rule.id)) + " does not act on squares");
    const int s = rule.scale;
    const Ring& r = patch.ring();
    SquarePatch out(r, patch.side() * s, patch.order() + 1);
    for (int j = 0; j < patch.side(); ++j)
        for (int i = 0; i < patch.side(); ++i) {
            const Value corners[4] = {patch.get(i, j + 1), patch.get(i + 1, j + 1), patch.get(i, j),
                                      patch.get(i + 1, j)};
            for (const auto& p : rule.points) out.ref(s * i + p.a, s * j + p.b) = p.formula.eval(r, corners, 4);
        }
    return out;
}

SquarePatch square_supertile(const SubstRule& rule, const Ring& ring, const SquareTile& t, int k) {
    if (k < 0) throw Error(ErrorKind::invalid_argument, "supertile order must be non-negative");
    SquarePatch p = patch_of_square(ring, t);
    for (int step = 0; step < k; ++step) {
        if (static_cast<std::int64_t>(p.side()) * rule.scale > 8192)
            throw Error(ErrorKind::invalid_argument, "supertile side would exceed 8192");
        p = refine_square(rule, p);
    }
    return p;
}

RightTriangleMesh right_triangle_seed(const Ring& ring, const TriTile& t) {
    return {ring, 0, {{0, 0}, {2, 0}, {1, 1}}, {t.x(), t.y(), t.z()}, {{0, 1, 2}}};
}

RightTriangleMesh refine_mesh(const SubstRule& rule, const RightTriangleMesh& mesh) {
    if (rule.geometry != Geometry::right_triangle)
        throw Error(ErrorKind::shape_mismatch, std::string(to_string(rule.id)) + " does not act on right triangles");
    RightTriangleMesh out{mesh.ring, mesh.order + 1, {}, {}, {}};
    const Ring& r = mesh.ring;
    mesh_step(rule, mesh.points, mesh.values, mesh.triangles, out.points, out.values, out.triangles,
              [&r](const Formula& f, const Value* c) { return f.eval(r, c, 3); });
    return out;
}

RightTriangleMesh right_triangle_supertile(const SubstRule& rule, const Ring& ring, const TriTile& t, int k) {
    if (k < 0 || k > 11) throw Error(ErrorKind::invalid_argument, "right-triangle order must lie in [0, 11]");
    RightTriangleMesh m = right_triangle_seed(ring, t);
    for (int step = 0; step < k; ++step) m = refine_mesh(rule, m);
    return m;
}

}  // namespace stern
