#include "stern/lattice.hpp"

#include <string>

namespace stern {

namespace {

[[noreturn]] void out_of_bounds(int i, int j) {
    throw Error(ErrorKind::out_of_bounds,
                "point (" + std::to_string(i) + ", " + std::to_string(j) + ") lies outside the patch");
}

void require_same_layout(const TriPatch& a, const TriPatch& b) {
    if (!same_layout(a, b)) throw Error(ErrorKind::shape_mismatch, "patches differ in shape, side or modulus");
}

}  // namespace

TriTile up_tile(Value x, Value y, Value z) noexcept { return {Orientation::up, {x, y, z}}; }
TriTile down_tile(Value x, Value y, Value z) noexcept { return {Orientation::down, {x, y, z}}; }

std::string to_string(const TriTile& t) {
    std::string s = t.orientation == Orientation::up ? "up(" : "down(";
    s += std::to_string(t.x()) + "," + std::to_string(t.y()) + "," + std::to_string(t.z()) + ")";
    return s;
}

TriPatch::TriPatch(const Ring& ring, PatchShape shape, Orientation orientation, int side, int order)
    : ring_(ring), shape_(shape), orientation_(orientation), n_(side), order_(order) {
    if (side < 0) throw Error(ErrorKind::invalid_argument, "patch side must be non-negative");
    std::int64_t offset = 0;
    row_base_.reserve(static_cast<std::size_t>(j_max() - j_min() + 1));
    for (int j = j_min(); j <= j_max(); ++j) {
        row_base_.push_back(offset - i_min(j));
        offset += i_max(j) - i_min(j) + 1;
    }
    values_.assign(static_cast<std::size_t>(offset), 0);
}

TriPatch TriPatch::triangle(const Ring& ring, Orientation orientation, int side, int order) {
    return TriPatch(ring, PatchShape::triangle, orientation, side, order);
}

TriPatch TriPatch::hex(const Ring& ring, int side, int order) {
    return TriPatch(ring, PatchShape::hex, Orientation::up, side, order);
}

Value TriPatch::at(int i, int j) const {
    if (!contains(i, j)) out_of_bounds(i, j);
    return get(i, j);
}

void TriPatch::set(int i, int j, Value v) {
    if (!contains(i, j)) out_of_bounds(i, j);
    ref(i, j) = ring_.reduce(v);
}

std::vector<std::vector<Value>> TriPatch::rows() const {
    std::vector<std::vector<Value>> out;
    for (int j = j_min(); j <= j_max(); ++j) {
        auto& row = out.emplace_back();
        for (int i = i_min(j); i <= i_max(j); ++i) row.push_back(get(i, j));
    }
    return out;
}

bool operator==(const TriPatch& a, const TriPatch& b) noexcept {
    return same_layout(a, b) && a.orientation_ == b.orientation_ && a.values_ == b.values_;
}

TriPatch patch_of_tile(const Ring& ring, const TriTile& t) {
    TriPatch p = TriPatch::triangle(ring, t.orientation, 1);
    p.set(0, 0, t.x());
    p.set(1, 0, t.y());
    p.set(0, 1, t.z());
    return p;
}

std::array<Point, 3> tile_points(int i, int j, Orientation local) noexcept {
    if (local == Orientation::up) return {Point{i, j}, Point{i + 1, j}, Point{i, j + 1}};
    return {Point{i + 1, j + 1}, Point{i, j + 1}, Point{i + 1, j}};
}

bool has_tile(const TriPatch& patch, int i, int j, Orientation local) noexcept {
    for (const Point& q : tile_points(i, j, local))
        if (!patch.contains(q)) return false;
    return true;
}

TriTile tile_at(const TriPatch& patch, int i, int j, Orientation local) {
    const auto pts = tile_points(i, j, local);
    for (const Point& q : pts)
        if (!patch.contains(q)) out_of_bounds(q.i, q.j);
    TriTile t;
    t.orientation = patch.orientation() == Orientation::up ? local : flip(local);
    for (std::size_t s = 0; s < 3; ++s) t.corners[s] = patch.get(pts[s].i, pts[s].j);
    return t;
}

void for_each_tile(const TriPatch& patch,
                   const std::function<void(int, int, Orientation, const TriTile&)>& fn) {
    // Down tiles can start one column left of the row (hex patches, j >= 0).
    for (int j = patch.j_min(); j < patch.j_max(); ++j) {
        for (int i = patch.i_min(j) - 1; i <= patch.i_max(j); ++i) {
            if (has_tile(patch, i, j, Orientation::up)) fn(i, j, Orientation::up, tile_at(patch, i, j, Orientation::up));
            if (has_tile(patch, i, j, Orientation::down))
                fn(i, j, Orientation::down, tile_at(patch, i, j, Orientation::down));
        }
    }
}

std::size_t tile_count(const TriPatch& patch) noexcept {
    const auto n = static_cast<std::size_t>(patch.side());
    return patch.shape() == PatchShape::hex ? 6 * n * n : n * n;
}

bool same_layout(const TriPatch& a, const TriPatch& b) noexcept {
    return a.shape() == b.shape() && a.side() == b.side() && a.ring() == b.ring() &&
           (a.shape() == PatchShape::hex || a.orientation() == b.orientation());
}

bool patch_equal(const TriPatch& a, const TriPatch& b) {
    require_same_layout(a, b);
    return a.values() == b.values();
}

TriPatch patch_add(const TriPatch& a, const TriPatch& b) {
    require_same_layout(a, b);
    TriPatch out = a;
    const Ring& r = a.ring();
    auto& v = out.values();
    const auto& w = b.values();
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = r.add(v[k], w[k]);
    return out;
}

TriPatch patch_scale(Value c, const TriPatch& a) {
    TriPatch out = a;
    const Ring& r = a.ring();
    const Value cc = r.reduce(c);
    for (Value& v : out.values()) v = r.mul(v, cc);
    return out;
}

SquarePatch::SquarePatch(const Ring& ring, int side, int order) : ring_(ring), n_(side), order_(order) {
    if (side < 0) throw Error(ErrorKind::invalid_argument, "patch side must be non-negative");
    values_.assign(static_cast<std::size_t>(side + 1) * static_cast<std::size_t>(side + 1), 0);
}

Value SquarePatch::at(int i, int j) const {
    if (!contains(i, j)) out_of_bounds(i, j);
    return get(i, j);
}

void SquarePatch::set(int i, int j, Value v) {
    if (!contains(i, j)) out_of_bounds(i, j);
    ref(i, j) = ring_.reduce(v);
}

std::vector<std::vector<Value>> SquarePatch::rows() const {
    std::vector<std::vector<Value>> out(static_cast<std::size_t>(n_ + 1));
    for (int j = 0; j <= n_; ++j)
        for (int i = 0; i <= n_; ++i) out[static_cast<std::size_t>(j)].push_back(get(i, j));
    return out;
}

SquarePatch patch_of_square(const Ring& ring, const SquareTile& t) {
    SquarePatch p(ring, 1);
    p.set(0, 1, t.corners[0]);
    p.set(1, 1, t.corners[1]);
    p.set(0, 0, t.corners[2]);
    p.set(1, 0, t.corners[3]);
    return p;
}

SquareTile square_at(const SquarePatch& patch, int i, int j) {
    return {{patch.at(i, j + 1), patch.at(i + 1, j + 1), patch.at(i, j), patch.at(i + 1, j)}};
}

SegTile SegPatch::tile(std::size_t n) const {
    if (n + 1 >= values.size())
        throw Error(ErrorKind::out_of_bounds, "segment tile " + std::to_string(n) + " lies outside the word");
    return {values[n], values[n + 1]};
}

}  // namespace stern
