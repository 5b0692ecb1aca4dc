#include "stern/analysis.hpp"

#include <algorithm>
#include <deque>

#include "stern/sigma.hpp"
#include "stern/tau.hpp"
#include "stern/tilings.hpp"

namespace stern {

namespace {

constexpr std::array<Point, 6> steps6{Point{1, 0}, Point{0, 1}, Point{-1, 1},
                                      Point{-1, 0}, Point{0, -1}, Point{1, -1}};

// Barycentric coordinate of (i, j) towards corner slot s of a side-n triangle.
int bary(int s, int i, int j, int n) noexcept { return s == 0 ? n - i - j : (s == 1 ? i : j); }

Point rot3(Point q, int n) noexcept { return {n - q.i - q.j, q.i}; }

std::string pt(Point q) { return "(" + std::to_string(q.i) + "," + std::to_string(q.j) + ")"; }

void note(LemmaResult& r, bool ok, const std::string& what) {
    ++r.cases;
    if (ok) return;
    if (r.violations++ == 0) r.first_violation = what;
}

bool has_zero_tile(const TriPatch& p) {
    bool found = false;
    for_each_tile(p, [&](int, int, Orientation, const TriTile& t) {
        if (t.x() == 0 && t.y() == 0 && t.z() == 0) found = true;
    });
    return found;
}

}  // namespace

std::size_t tile_index(const Ring& ring, const TriTile& t) noexcept {
    const std::size_t p = ring.modulus();
    return (t.orientation == Orientation::down ? p * p * p : 0) + (t.x() * p + t.y()) * p + t.z();
}

TriTile tile_from_index(const Ring& ring, std::size_t index) noexcept {
    const std::size_t p = ring.modulus();
    TriTile t;
    t.corners[2] = static_cast<Value>(index % p);
    index /= p;
    t.corners[1] = static_cast<Value>(index % p);
    index /= p;
    t.corners[0] = static_cast<Value>(index % p);
    index /= p;
    t.orientation = index == 0 ? Orientation::up : Orientation::down;
    return t;
}

std::vector<TriTile> all_tiles(const Ring& ring, bool include_zero) {
    const std::size_t p = ring.modulus();
    if (p > 255) throw Error(ErrorKind::invalid_argument, "tile enumeration limited to modulus <= 255");
    std::vector<TriTile> out;
    for (std::size_t k = 0; k < 2 * p * p * p; ++k) {
        TriTile t = tile_from_index(ring, k);
        if (include_zero || t.x() || t.y() || t.z()) out.push_back(t);
    }
    return out;
}

ReachabilityTable::ReachabilityTable(const Ring& ring, std::uint32_t max_prime) : ring_(ring) {
    ring.require_odd_prime("reachability");
    if (ring.modulus() > max_prime)
        throw Error(ErrorKind::invalid_argument, "reachability capped at p <= " + std::to_string(max_prime) +
                                                     "; the table holds 4(p^3-1)^2 entries");
    tiles_ = all_tiles(ring, false);
    const std::size_t n = tiles_.size();
    slot_of_index_.assign(2 * static_cast<std::size_t>(ring.modulus()) * ring.modulus() * ring.modulus(), -1);
    for (std::size_t s = 0; s < n; ++s) slot_of_index_[tile_index(ring, tiles_[s])] = static_cast<std::int32_t>(s);

    std::vector<std::array<std::size_t, 4>> succ(n);
    for (std::size_t s = 0; s < n; ++s) {
        const Children ch = sigma_children(ring, tiles_[s]);
        for (Letter l : all_letters) succ[s][static_cast<std::size_t>(l)] = slot(ch[l]);
    }
    dist_.assign(n * n, -1);
    total_ = true;
    for (std::size_t src = 0; src < n; ++src) {
        std::int16_t* d = &dist_[src * n];
        std::deque<std::size_t> queue{src};
        d[src] = 0;
        std::size_t reached = 1;
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t v : succ[u])
                if (d[v] < 0) {
                    d[v] = static_cast<std::int16_t>(d[u] + 1);
                    ++reached;
                    queue.push_back(v);
                }
        }
        if (reached != n) total_ = false;
    }
}

std::size_t ReachabilityTable::slot(const TriTile& t) const {
    const std::int32_t s = slot_of_index_.at(tile_index(ring_, t));
    if (s < 0) throw Error(ErrorKind::invalid_argument, "the all-zero tile is not part of T*");
    return static_cast<std::size_t>(s);
}

std::optional<int> ReachabilityTable::distance(const TriTile& from, const TriTile& to) const {
    const std::int16_t d = dist_[slot(from) * tiles_.size() + slot(to)];
    if (d < 0) return std::nullopt;
    return d;
}

int ReachabilityTable::max_distance_to(const TriTile& target) const {
    const std::size_t n = tiles_.size(), t = slot(target);
    int best = 0;
    for (std::size_t s = 0; s < n; ++s) {
        const int d = dist_[s * n + t];
        if (d < 0) return -1;
        best = std::max(best, d);
    }
    return best;
}

int ReachabilityTable::max_distance_from(const TriTile& source) const {
    const std::size_t n = tiles_.size(), s = slot(source);
    int best = 0;
    for (std::size_t t = 0; t < n; ++t) {
        const int d = dist_[s * n + t];
        if (d < 0) return -1;
        best = std::max(best, d);
    }
    return best;
}

Primitivity primitivity_exponent(const ReachabilityTable& table) {
    if (!table.total()) throw Error(ErrorKind::search_exhausted, "reachability table is not total");
    const TriTile hub = up_tile(0, 1, 1);
    return {table.max_distance_to(hub), table.max_distance_from(hub)};
}

bool occurs_in(const Ring& ring, const TriTile& from, const TriTile& to, int k) {
    if (k < 0) throw Error(ErrorKind::invalid_argument, "k must be non-negative");
    if (k <= 11) {
        bool found = false;
        for_each_tile(supertile(ring, from, k), [&](int, int, Orientation, const TriTile& t) {
            if (t == to) found = true;
        });
        return found;
    }
    const std::size_t p = ring.modulus();
    std::vector<char> level(2 * p * p * p, 0), next;
    level[tile_index(ring, from)] = 1;
    for (int step = 0; step < k; ++step) {
        next.assign(level.size(), 0);
        for (std::size_t s = 0; s < level.size(); ++s) {
            if (!level[s]) continue;
            const Children ch = sigma_children(ring, tile_from_index(ring, s));
            for (Letter l : all_letters) next[tile_index(ring, ch[l])] = 1;
        }
        level.swap(next);
    }
    return level[tile_index(ring, to)] != 0;
}

int hex_distance(Point a, Point b) noexcept {
    const int di = a.i - b.i, dj = a.j - b.j;
    return std::max({std::abs(di), std::abs(dj), std::abs(di + dj)});
}

std::vector<Point> hex_ring(Point c, int r) {
    if (r == 0) return {c};
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(6 * r));
    Point q{c.i + r, c.j};
    for (int edge = 0; edge < 6; ++edge) {
        const Point d = steps6[static_cast<std::size_t>((edge + 2) % 6)];
        for (int s = 0; s < r; ++s) {
            out.push_back(q);
            q = {q.i + d.i, q.j + d.j};
        }
    }
    return out;
}

std::vector<ZeroPath> find_zero_hexagons(const TriPatch& patch, int max_side) {
    std::vector<ZeroPath> found;
    for (int side = 1; side <= max_side && side <= patch.side(); side *= 2) {
        for (int j = patch.j_min(); j <= patch.j_max(); ++j)
            for (int i = patch.i_min(j); i <= patch.i_max(j); ++i) {
                const Point c{i, j};
                // The ring and its outer neighbours must lie inside the patch.
                if (!patch.contains(i + side + 1, j) || !patch.contains(i - side - 1, j) ||
                    !patch.contains(i, j + side + 1) || !patch.contains(i, j - side - 1) ||
                    !patch.contains(i - side - 1, j + side + 1) || !patch.contains(i + side + 1, j - side - 1))
                    continue;
                auto ring = hex_ring(c, side);
                bool ok = true;
                for (const Point& q : ring)
                    if (patch.get(q.i, q.j) != 0) {
                        ok = false;
                        break;
                    }
                for (std::size_t k = 0; ok && k < ring.size(); ++k)
                    for (const Point& d : steps6) {
                        const Point nb{ring[k].i + d.i, ring[k].j + d.j};
                        if (hex_distance(nb, c) != side && patch.get(nb.i, nb.j) == 0) {
                            ok = false;
                            break;
                        }
                    }
                if (ok) found.push_back({c, side, std::move(ring)});
            }
    }
    return found;
}

std::vector<LemmaResult> check_zero_lemmas(const Ring& ring, int k_max) {
    ring.require_odd_prime("check_zero_lemmas");
    if (k_max < 0 || k_max > 6) throw Error(ErrorKind::invalid_argument, "k_max must lie in [0, 6]");
    const Value p = static_cast<Value>(ring.modulus());
    const auto tiles = all_tiles(ring, false);

    LemmaResult zero_tile{"all-zero tile only from an all-zero seed", 0, 0, {}};
    LemmaResult scalar{"zero set invariant under nonzero scaling", 0, 0, {}};
    LemmaResult lines{"two zeros give lines of 0 and c", 0, 0, {}};
    LemmaResult alternating{"0, +c, -c gives an alternating zero line", 0, 0, {}};
    LemmaResult corner{"a single zero stays in its corner tile", 0, 0, {}};
    LemmaResult triple{"no centred equilateral triple of zeros", 0, 0, {}};

    for (int k = 0; k <= k_max; ++k) {
        for (Orientation o : {Orientation::up, Orientation::down})
            note(zero_tile, refine(patch_of_tile(ring, {o, {0, 0, 0}}), k).values() ==
                                std::vector<Value>(static_cast<std::size_t>((1 << k) + 1) * ((1 << k) + 2) / 2, 0),
                 "zero seed produced a nonzero value");
        for (const TriTile& t : tiles) {
            const TriPatch s = supertile(ring, t, k);
            note(zero_tile, !has_zero_tile(s), "sigma^" + std::to_string(k) + " " + to_string(t));
            if (k != k_max) continue;
            for (Value m = 2; m < p; ++m) {
                const TriTile mt{t.orientation, {ring.mul(m, t.x()), ring.mul(m, t.y()), ring.mul(m, t.z())}};
                const TriPatch ms = supertile(ring, mt, k);
                bool same = true;
                for (std::size_t q = 0; q < s.values().size(); ++q)
                    if ((s.values()[q] == 0) != (ms.values()[q] == 0)) same = false;
                note(scalar, same, std::to_string(m) + " * " + to_string(t));
            }
        }

        const int n = 1 << k;
        for (Orientation o : {Orientation::up, Orientation::down})
            for (Value c = 1; c < p; ++c)
                for (int slot = 0; slot < 3; ++slot) {
                    // Two zeros and c at `slot`.
                    TriTile t{o, {0, 0, 0}};
                    t.corners[static_cast<std::size_t>(slot)] = c;
                    const TriPatch s = supertile(ring, t, k);
                    bool ok = true;
                    for (int j = 0; j <= n; ++j)
                        for (int i = 0; i + j <= n; ++i) {
                            const int d = bary(slot, i, j, n);
                            if ((d == 0 && s.get(i, j) != 0) || (d == 1 && s.get(i, j) != c)) ok = false;
                        }
                    note(lines, ok, "sigma^" + std::to_string(k) + " " + to_string(t));

                    // Zero at `slot`, +c and -c at the other two.
                    const int s1 = (slot + 1) % 3, s2 = (slot + 2) % 3;
                    TriTile u{o, {0, 0, 0}};
                    u.corners[static_cast<std::size_t>(s1)] = c;
                    u.corners[static_cast<std::size_t>(s2)] = ring.neg(c);
                    const TriPatch a = supertile(ring, u, k);
                    ok = true;
                    for (int j = 0; j <= n; ++j)
                        for (int i = 0; i + j <= n; ++i) {
                            const int d1 = bary(s1, i, j, n), d2 = bary(s2, i, j, n);
                            if (d1 == d2 && a.get(i, j) != 0) ok = false;
                            if (d1 == d2 + 1 && a.get(i, j) != c) ok = false;
                            if (d2 == d1 + 1 && a.get(i, j) != ring.neg(c)) ok = false;
                        }
                    note(alternating, ok, "sigma^" + std::to_string(k) + " " + to_string(u));
                }

        static const Letter corner_letter[3] = {Letter::beta, Letter::gamma, Letter::delta};
        for (const TriTile& t : tiles) {
            const int zeros = (t.x() == 0) + (t.y() == 0) + (t.z() == 0);
            if (zeros != 1) continue;
            const int slot = t.x() == 0 ? 0 : (t.y() == 0 ? 1 : 2);
            const PositionWord w(static_cast<std::size_t>(k), corner_letter[slot]);
            note(corner, lookup_tile(supertile(ring, t, k), w) == t, "sigma^" + std::to_string(k) + " " + to_string(t));
        }

        for (Orientation o : {Orientation::up, Orientation::down})
            for (int slot = 0; slot < 3; ++slot) {
                TriTile t{o, {0, 0, 0}};
                t.corners[static_cast<std::size_t>(slot)] = 1;
                const TriPatch s = supertile(ring, t, k);
                for (int j = 0; j <= n; ++j)
                    for (int i = 0; i + j <= n; ++i) {
                        const Point a{i, j}, b = rot3(a, n), c = rot3(b, n);
                        note(triple, s.get(a.i, a.j) != 0 || s.get(b.i, b.j) != 0 || s.get(c.i, c.j) != 0,
                             "sigma^" + std::to_string(k) + " " + to_string(t) + " at " + pt(a));
                    }
            }
    }
    return {zero_tile, scalar, lines, alternating, corner, triple};
}

SymmetrySet detect_symmetries(const TriPatch& patch) {
    const Ring& r = patch.ring();
    auto holds = [&](auto map, bool odd) {
        for (int j = patch.j_min(); j <= patch.j_max(); ++j)
            for (int i = patch.i_min(j); i <= patch.i_max(j); ++i) {
                const Point q = map(Point{i, j});
                const Value v = patch.get(i, j), w = patch.get(q.i, q.j);
                if (w != (odd ? r.neg(v) : v)) return false;
            }
        return true;
    };
    SymmetrySet s = 0;
    if (patch.shape() == PatchShape::triangle) {
        const int n = patch.side();
        auto t_yz = [](Point q) { return Point{q.j, q.i}; };
        auto t_xy = [n](Point q) { return Point{n - q.i - q.j, q.j}; };
        auto t_xz = [n](Point q) { return Point{q.i, n - q.i - q.j}; };
        if (holds(t_yz, false) || holds(t_xy, false) || holds(t_xz, false)) s |= sym_mirror;
        if (holds(t_yz, true) || holds(t_xy, true) || holds(t_xz, true)) s |= sym_odd_mirror;
        if (holds([n](Point q) { return rot3(q, n); }, false)) s |= sym_rot3;
        return s;
    }
    bool mirror = false, odd = false;
    for (int k = 0; k < 6; ++k) {
        auto refl = [k](Point q) { return rotate60(Point{q.j, q.i}, k); };
        mirror = mirror || holds(refl, false);
        odd = odd || holds(refl, true);
    }
    if (mirror) s |= sym_mirror;
    if (odd) s |= sym_odd_mirror;
    if (holds([](Point q) { return rotate60(q); }, false)) s |= sym_rot6;
    else if (holds([](Point q) { return rotate60(q, 2); }, false)) s |= sym_rot3;
    return s;
}

std::string to_string_symmetries(SymmetrySet s) {
    std::string out;
    auto add = [&](const char* name) {
        if (!out.empty()) out += ',';
        out += name;
    };
    if (s & sym_mirror) add("mirror");
    if (s & sym_rot3) add("rot3");
    if (s & sym_odd_mirror) add("odd-mirror");
    if (s & sym_rot6) add("rot6");
    return out;
}

std::optional<Point> find_diamond(const TriPatch& patch, const TriTile& up, const TriTile& down) {
    for (int j = patch.j_min(); j < patch.j_max(); ++j)
        for (int i = patch.i_min(j); i <= patch.i_max(j); ++i) {
            if (!has_tile(patch, i, j, Orientation::up) || !has_tile(patch, i, j, Orientation::down)) continue;
            const TriTile a = tile_at(patch, i, j, Orientation::up), b = tile_at(patch, i, j, Orientation::down);
            if ((a == up && b == down) || (a == down && b == up)) return Point{i, j};
        }
    return std::nullopt;
}

std::optional<Point> find_two_ring_hex(const TriPatch& patch, Value c, Value inner, Value corner, Value edge) {
    const Ring& r = patch.ring();
    c = r.reduce(c);
    inner = r.reduce(inner);
    corner = r.reduce(corner);
    edge = r.reduce(edge);
    for (int j = patch.j_min() + 2; j <= patch.j_max() - 2; ++j)
        for (int i = patch.i_min(j); i <= patch.i_max(j); ++i) {
            if (patch.get(i, j) != c) continue;
            const Point ctr{i, j};
            bool ok = true;
            for (const Point& q : hex_ring(ctr, 1))
                ok = ok && patch.contains(q) && patch.get(q.i, q.j) == inner;
            const auto outer = hex_ring(ctr, 2);
            for (std::size_t k = 0; ok && k < outer.size(); ++k) {
                const Point& q = outer[k];
                ok = patch.contains(q) && patch.get(q.i, q.j) == (k % 2 == 0 ? corner : edge);
            }
            if (ok) return ctr;
        }
    return std::nullopt;
}

std::vector<Witness> nonperiodicity_witnesses(const Ring& ring, int zero_doublings) {
    ring.require_odd_prime("nonperiodicity_witnesses");
    const int p = static_cast<int>(ring.modulus());
    const int zero_step = (3 * p + 1) / 2;
    if (zero_doublings < 0 || zero_step + zero_doublings > 12)
        throw Error(ErrorKind::invalid_argument, "zero-hexagon search would exceed sigma^12");
    std::vector<Witness> out;
    auto where = [](const std::optional<Point>& q) { return q ? "at " + pt(*q) : std::string("absent"); };

    TriPatch s = patch_of_tile(ring, up_tile(1, 1, 0));
    for (int k = 1; k <= zero_step + zero_doublings; ++k) {
        s = refine(s);
        if (k <= p - 1) {
            const Value a = ring.reduce(k), b = ring.reduce(k + 1);
            const TriTile up = up_tile(a, b, 1), down = down_tile(a, 1, b);
            const auto q = find_diamond(s, up, down);
            out.push_back({"diamond " + to_string(up) + " / " + to_string(down), k, q.has_value(), where(q)});
        }
        if (k == p) {
            const auto q = find_diamond(s, up_tile(0, 1, 1), down_tile(0, 1, 1));
            out.push_back({"diamond up(0,1,1) / down(0,1,1)", k, q.has_value(), where(q)});
        }
        if (k >= p + 1 && k <= p + 1 + (p - 1) / 2) {
            const int kk = k - p - 1;
            if (kk == 0) {
                // Only the seed lies inside the patch at this step; its second ring does not.
                const auto q = find_hex_seed(s, 1, 2);
                out.push_back({"hex seed h_{1,2}", k, q.has_value(), where(q)});
            } else {
                const auto q = find_two_ring_hex(s, 2, 2 * kk + 1, 2 * kk - 1, 4 * kk - 2);
                out.push_back({"hex 2 / " + std::to_string(2 * kk + 1) + " / " + std::to_string(2 * kk - 1) + "," +
                                   std::to_string(4 * kk - 2),
                               k, q.has_value(), where(q)});
            }
        }
        if (k >= zero_step) {
            const int side = 1 << (k - zero_step);
            const auto paths = find_zero_hexagons(s, side);
            const auto it = std::find_if(paths.begin(), paths.end(), [side](const ZeroPath& z) { return z.side == side; });
            out.push_back({"isolated zero hexagon of side " + std::to_string(side), k, it != paths.end(),
                           it != paths.end() ? "centred " + pt(it->centre) : std::string("absent")});
        }
    }

    std::vector<Value> word(1 << 16);
    for (std::size_t n = 0; n < word.size(); ++n) word[n] = fusc(n, ring);
    const auto period = least_period(word, 4096);
    out.push_back({"fusc mod p has no period <= 4096 in its first 2^16 terms", 16, !period.has_value(),
                   period ? "period " + std::to_string(*period) : std::string("aperiodic prefix")});
    return out;
}

}  // namespace stern
