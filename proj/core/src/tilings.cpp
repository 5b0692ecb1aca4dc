#include "stern/tilings.hpp"

namespace stern {

namespace {

constexpr std::array<Point, 6> neighbours{Point{1, 0}, Point{0, 1}, Point{-1, 1},
                                          Point{-1, 0}, Point{0, -1}, Point{1, -1}};

}  // namespace

TriTile s_root(const Ring& ring, const TriTile& t, int k) {
    ring.require_odd_prime("s_patch");
    TriTile s = t;
    for (int step = 0; step < k; ++step) s = inverse_child(ring, s, Letter::alpha);
    return s;
}

TriPatch s_patch(const Ring& ring, const TriTile& t, int k) { return supertile(ring, s_root(ring, t, k), k); }

int self_similarity_period(const Ring& ring) {
    ring.require_odd_prime("self_similarity_period");
    if (ring.modulus() == 3) return 3;
    return static_cast<int>(ring.mult_order(4));
}

TriPatch hex_seed(const Ring& ring, Value b, Value c) {
    TriPatch h = TriPatch::hex(ring, 1);
    for (Point q : neighbours) h.set(q.i, q.j, b);
    h.set(0, 0, c);
    return h;
}

std::array<TriTile, 6> hex_seed_tiles(const Ring& ring, Value b, Value c) {
    const TriPatch h = hex_seed(ring, b, c);
    std::array<TriTile, 6> out{};
    std::size_t n = 0;
    for_each_tile(h, [&](int, int, Orientation, const TriTile& t) { out[n++] = t; });
    return out;
}

TriPatch h_patch(const Ring& ring, Value b, Value c, int k) {
    ring.require_odd_prime("h_patch");
    if (ring.reduce(c) == 0) throw Error(ErrorKind::invalid_center, "h_{b,0} does not occur; centre must be nonzero");
    const std::uint64_t steps = static_cast<std::uint64_t>(k) * ring.modulus();
    if (k < 0 || steps > 12) throw Error(ErrorKind::invalid_argument, "h_patch needs 0 <= k*p <= 12");
    TriPatch h = refine(hex_seed(ring, b, c), static_cast<int>(steps));
    h.set_order(k);
    return h;
}

TriPatch central_hex(const TriPatch& hex, int side) {
    if (hex.shape() != PatchShape::hex) throw Error(ErrorKind::shape_mismatch, "central_hex needs a hex patch");
    if (side < 0 || side > hex.side()) throw Error(ErrorKind::out_of_bounds, "central hex larger than the patch");
    TriPatch out = TriPatch::hex(hex.ring(), side);
    for (int j = out.j_min(); j <= out.j_max(); ++j)
        for (int i = out.i_min(j); i <= out.i_max(j); ++i) out.ref(i, j) = hex.get(i, j);
    return out;
}

Point rotate60(Point q, int times) noexcept {
    times = ((times % 6) + 6) % 6;
    for (int r = 0; r < times; ++r) q = rotate60(q);
    return q;
}

TriTile h_lookup(const TriPatch& hex, int sector, const PositionWord& w) {
    if (hex.shape() != PatchShape::hex) throw Error(ErrorKind::shape_mismatch, "h_lookup needs a hex patch");
    if (sector < 0 || sector > 5)
        throw Error(ErrorKind::invalid_sector, "sector must lie in [0, 5], got " + std::to_string(sector));
    if (w.size() >= 31 || (1 << w.size()) > hex.side())
        throw Error(ErrorKind::out_of_bounds, "position word longer than the hex patch allows");
    const Placement pl = locate(w, 1 << w.size());
    const auto pts = pl.corners();
    TriTile t{pl.sign > 0 ? Orientation::up : Orientation::down, {}};
    for (int s = 0; s < 3; ++s) {
        const Point q = rotate60(pts[static_cast<std::size_t>((s + sector) % 3)], sector);
        t.corners[static_cast<std::size_t>(s)] = hex.at(q);
    }
    if (sector % 2 == 1) t.orientation = flip(t.orientation);
    return t;
}

std::optional<Point> find_hex_seed(const TriPatch& patch, Value b, Value c) {
    const Ring& r = patch.ring();
    b = r.reduce(b);
    c = r.reduce(c);
    for (int j = patch.j_min() + 1; j < patch.j_max(); ++j)
        for (int i = patch.i_min(j); i <= patch.i_max(j); ++i) {
            if (patch.get(i, j) != c) continue;
            bool ok = true;
            for (Point d : neighbours) {
                if (!patch.contains(i + d.i, j + d.j) || patch.get(i + d.i, j + d.j) != b) {
                    ok = false;
                    break;
                }
            }
            if (ok) return Point{i, j};
        }
    return std::nullopt;
}

int hex_seed_reachability(const Ring& ring, Value b, Value c, int k_bound) {
    ring.require_odd_prime("hex_seed_reachability");
    if (k_bound < 0 || k_bound > 13) throw Error(ErrorKind::invalid_argument, "k bound must lie in [0, 13]");
    TriPatch p = patch_of_tile(ring, up_tile(1, 1, 0));
    for (int k = 0; k <= k_bound; ++k) {
        if (k > 0) p = refine(p);
        if (find_hex_seed(p, b, c)) return k;
    }
    throw Error(ErrorKind::search_exhausted, "h_{" + std::to_string(b) + "," + std::to_string(c) +
                                                 "} not found in sigma^k(up 1,1,0) for k <= " +
                                                 std::to_string(k_bound));
}

}  // namespace stern
