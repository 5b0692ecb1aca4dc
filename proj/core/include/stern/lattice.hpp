#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "stern/ring.hpp"

namespace stern {

enum class Orientation : std::uint8_t { up, down };

constexpr Orientation flip(Orientation o) noexcept {
    return o == Orientation::up ? Orientation::down : Orientation::up;
}

// Corner order: up = (bottom-left, bottom-right, top); down = (top-right, top-left, bottom).
struct TriTile {
    Orientation orientation = Orientation::up;
    Row<3> corners{};

    Value x() const noexcept { return corners[0]; }
    Value y() const noexcept { return corners[1]; }
    Value z() const noexcept { return corners[2]; }

    friend bool operator==(const TriTile&, const TriTile&) = default;
};

TriTile up_tile(Value x, Value y, Value z) noexcept;
TriTile down_tile(Value x, Value y, Value z) noexcept;
std::string to_string(const TriTile& t);

struct Point {
    int i = 0;
    int j = 0;
    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

enum class PatchShape : std::uint8_t { triangle, hex };

// Values at the points of a triangular-lattice region.
//
// triangle: i, j >= 0, i + j <= n. A down-oriented triangle is stored in the
//           half-turned frame, so its storage matches the up triangle with the
//           same corner row; only orientation() differs.
// hex:      |i|, |j|, |i + j| <= n, centred on (0, 0).
class TriPatch {
public:
    static TriPatch triangle(const Ring& ring, Orientation orientation, int side, int order = 0);
    static TriPatch hex(const Ring& ring, int side, int order = 0);

    const Ring& ring() const noexcept { return ring_; }
    PatchShape shape() const noexcept { return shape_; }
    Orientation orientation() const noexcept { return orientation_; }
    int side() const noexcept { return n_; }
    int order() const noexcept { return order_; }
    void set_order(int k) noexcept { order_ = k; }

    int j_min() const noexcept { return shape_ == PatchShape::hex ? -n_ : 0; }
    int j_max() const noexcept { return n_; }
    int i_min(int j) const noexcept { return shape_ == PatchShape::hex ? std::max(-n_, -n_ - j) : 0; }
    int i_max(int j) const noexcept { return shape_ == PatchShape::hex ? std::min(n_, n_ - j) : n_ - j; }

    bool contains(int i, int j) const noexcept {
        return j >= j_min() && j <= j_max() && i >= i_min(j) && i <= i_max(j);
    }
    bool contains(Point p) const noexcept { return contains(p.i, p.j); }

    Value at(int i, int j) const;
    Value at(Point p) const { return at(p.i, p.j); }
    void set(int i, int j, Value v);

    // Unchecked access for inner loops.
    Value get(int i, int j) const noexcept { return values_[index(i, j)]; }
    Value& ref(int i, int j) noexcept { return values_[index(i, j)]; }

    std::size_t point_count() const noexcept { return values_.size(); }
    const std::vector<Value>& values() const noexcept { return values_; }
    std::vector<Value>& values() noexcept { return values_; }

    std::vector<std::vector<Value>> rows() const;

    friend bool operator==(const TriPatch& a, const TriPatch& b) noexcept;

private:
    TriPatch(const Ring& ring, PatchShape shape, Orientation orientation, int side, int order);

    std::size_t index(int i, int j) const noexcept {
        return static_cast<std::size_t>(row_base_[static_cast<std::size_t>(j - j_min())] + i);
    }

    Ring ring_;
    PatchShape shape_;
    Orientation orientation_;
    int n_;
    int order_;
    std::vector<std::int64_t> row_base_;
    std::vector<Value> values_;
};

TriPatch patch_of_tile(const Ring& ring, const TriTile& t);

// Tile whose lattice corners are read from the stored frame.
// up at (i, j):   (i, j), (i+1, j), (i, j+1)
// down at (i, j): (i+1, j+1), (i, j+1), (i+1, j)
// The returned orientation is local_orientation flipped for down patches.
TriTile tile_at(const TriPatch& patch, int i, int j, Orientation local_orientation);

bool has_tile(const TriPatch& patch, int i, int j, Orientation local_orientation) noexcept;

// Corner points of a tile in the stored frame, in slot order.
std::array<Point, 3> tile_points(int i, int j, Orientation local_orientation) noexcept;

// Visits every tile, up tiles and down tiles interleaved row by row.
void for_each_tile(const TriPatch& patch,
                   const std::function<void(int i, int j, Orientation local, const TriTile&)>& fn);

std::size_t tile_count(const TriPatch& patch) noexcept;

bool same_layout(const TriPatch& a, const TriPatch& b) noexcept;
bool patch_equal(const TriPatch& a, const TriPatch& b);
TriPatch patch_add(const TriPatch& a, const TriPatch& b);
TriPatch patch_scale(Value c, const TriPatch& a);

// Square region [0, n]^2, j = 0 is the bottom row.
// Corner order: w top-left, x top-right, y bottom-left, z bottom-right.
struct SquareTile {
    std::array<Value, 4> corners{};  // w, x, y, z
    friend bool operator==(const SquareTile&, const SquareTile&) = default;
};

class SquarePatch {
public:
    SquarePatch(const Ring& ring, int side, int order = 0);

    const Ring& ring() const noexcept { return ring_; }
    int side() const noexcept { return n_; }
    int order() const noexcept { return order_; }

    bool contains(int i, int j) const noexcept { return i >= 0 && j >= 0 && i <= n_ && j <= n_; }
    Value at(int i, int j) const;
    void set(int i, int j, Value v);
    Value get(int i, int j) const noexcept { return values_[index(i, j)]; }
    Value& ref(int i, int j) noexcept { return values_[index(i, j)]; }

    std::vector<std::vector<Value>> rows() const;

    friend bool operator==(const SquarePatch&, const SquarePatch&) = default;

private:
    std::size_t index(int i, int j) const noexcept {
        return static_cast<std::size_t>(j) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(i);
    }

    Ring ring_;
    int n_;
    int order_;
    std::vector<Value> values_;
};

SquarePatch patch_of_square(const Ring& ring, const SquareTile& t);
SquareTile square_at(const SquarePatch& patch, int i, int j);

struct SegTile {
    Value x = 0;
    Value y = 0;
    friend bool operator==(const SegTile&, const SegTile&) = default;
};

// Endpoint values of a segment word: 2^k + 1 points for order k.
struct SegPatch {
    Ring ring{2};
    int order = 0;
    std::vector<Value> values;

    std::size_t length() const noexcept { return values.empty() ? 0 : values.size() - 1; }
    SegTile tile(std::size_t n) const;

    friend bool operator==(const SegPatch&, const SegPatch&) = default;
};

// Right-isosceles triangle mesh. Coordinates are integers on a grid that
// doubles each refinement; a triangle lists (hypotenuse end, hypotenuse end, apex).
struct RightTriangleMesh {
    Ring ring{2};
    int order = 0;
    std::vector<std::array<std::int64_t, 2>> points;
    std::vector<Value> values;
    std::vector<std::array<std::uint32_t, 3>> triangles;

    friend bool operator==(const RightTriangleMesh&, const RightTriangleMesh&) = default;
};

using AnyPatch = std::variant<TriPatch, SquarePatch, SegPatch, RightTriangleMesh>;

// {"modulus": m, "shape": "...", "order": k, "rows": [[...], ...]}, rows listed bottom to top.
std::string to_json(const AnyPatch& patch);
AnyPatch patch_from_json(const std::string& text);

}  // namespace stern
