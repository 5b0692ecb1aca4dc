#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stern/lattice.hpp"
#include "stern/ring.hpp"

namespace stern {

// Tiles are indexed orientation * p^3 + x p^2 + y p + z.
std::size_t tile_index(const Ring& ring, const TriTile& t) noexcept;
TriTile tile_from_index(const Ring& ring, std::size_t index) noexcept;
// T, or T* (nonzero tiles) when include_zero is false.
std::vector<TriTile> all_tiles(const Ring& ring, bool include_zero);

// d(t, t') = least k with t' occurring in sigma^k(t), over T*.
class ReachabilityTable {
public:
    explicit ReachabilityTable(const Ring& ring, std::uint32_t max_prime = 7);

    const Ring& ring() const noexcept { return ring_; }
    const std::vector<TriTile>& tiles() const noexcept { return tiles_; }
    std::optional<int> distance(const TriTile& from, const TriTile& to) const;
    bool total() const noexcept { return total_; }
    // max over t of d(t, target) and of d(source, t); -1 if some pair is unreachable.
    int max_distance_to(const TriTile& target) const;
    int max_distance_from(const TriTile& source) const;

private:
    std::size_t slot(const TriTile& t) const;

    Ring ring_;
    std::vector<TriTile> tiles_;
    std::vector<std::int32_t> slot_of_index_;
    std::vector<std::int16_t> dist_;
    bool total_ = false;
};

struct Primitivity {
    int m = 0;  // max_t d(t, up 0,1,1)
    int n = 0;  // max_t d(up 0,1,1, t)
    int exponent() const noexcept { return m + n; }
};

// Throws SearchExhausted when the table is not total.
Primitivity primitivity_exponent(const ReachabilityTable& table);

// Does `to` occur among the tiles of sigma^k(from)? Scans the patch for k <= 11,
// otherwise the exact set of level-k tiles.
bool occurs_in(const Ring& ring, const TriTile& from, const TriTile& to, int k);

// Hex distance between lattice points.
int hex_distance(Point a, Point b) noexcept;
// Points at hex distance r from c, counter-clockwise from c + (r, 0).
std::vector<Point> hex_ring(Point c, int r);

struct ZeroPath {
    Point centre;
    int side = 0;
    std::vector<Point> points;
};

// Zero rings of side 2^w around lattice points whose every lattice neighbour
// off the ring is nonzero. Rings touching the patch border are skipped.
std::vector<ZeroPath> find_zero_hexagons(const TriPatch& patch, int max_side = 1 << 20);

struct LemmaResult {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t violations = 0;
    std::string first_violation;
    bool passed() const noexcept { return violations == 0; }
};

std::vector<LemmaResult> check_zero_lemmas(const Ring& ring, int k_max);

enum Symmetry : std::uint8_t { sym_mirror = 1, sym_rot3 = 2, sym_odd_mirror = 4, sym_rot6 = 8 };
using SymmetrySet = std::uint8_t;

// Hex patches report rot3 only when rot6 fails.
SymmetrySet detect_symmetries(const TriPatch& patch);
std::string to_string_symmetries(SymmetrySet s);

// Lattice (i, j) where the up and down tiles at (i, j) equal the pair.
std::optional<Point> find_diamond(const TriPatch& patch, const TriTile& up, const TriTile& down);

// centre c, ring of `inner` at distance 1, corners `corner` and edge midpoints `edge` at distance 2.
std::optional<Point> find_two_ring_hex(const TriPatch& patch, Value c, Value inner, Value corner, Value edge);

struct Witness {
    std::string name;
    int step = 0;  // k in sigma^k(up 1,1,0), or word length for the 1D check
    bool found = false;
    std::string detail;
};

std::vector<Witness> nonperiodicity_witnesses(const Ring& ring, int zero_doublings = 1);

}  // namespace stern
