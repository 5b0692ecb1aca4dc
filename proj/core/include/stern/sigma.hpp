#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stern/lattice.hpp"
#include "stern/ring.hpp"

namespace stern {

enum class Letter : std::uint8_t { alpha, beta, gamma, delta };

constexpr std::array<Letter, 4> all_letters{Letter::alpha, Letter::beta, Letter::gamma, Letter::delta};

// w_0 is the outermost letter: it picks the child of the root.
using PositionWord = std::vector<Letter>;

// Accepts a/b/g/d (ASCII) and the Greek letters; an empty string is the empty word.
PositionWord parse_word(std::string_view text);
std::string to_string(const PositionWord& w);

enum class WordConvention : std::uint8_t {
    plane,   // alpha, beta, gamma, delta -> 0, 1, 2, 3
    sector,  // beta, alpha, gamma, delta -> 0, 1, 2, 3
};

// Base-4 value, first letter most significant.
std::uint64_t encode_word(const PositionWord& w, WordConvention convention);
PositionWord decode_word(std::uint64_t index, int length, WordConvention convention);
int letter_digit(Letter l, WordConvention convention) noexcept;
Letter digit_letter(int digit, WordConvention convention);

// A, B, C, D.
Mat3 letter_matrix(const Ring& ring, Letter l);
Mat3 word_matrix(const Ring& ring, const PositionWord& w);

struct Children {
    TriTile alpha, beta, gamma, delta;
    const TriTile& operator[](Letter l) const noexcept;
};

Children sigma_children(const Ring& ring, const TriTile& t);
TriTile child(const Ring& ring, const TriTile& t, Letter l);

// The tile whose child l is t. Needs A invertible, so 2 must be a unit.
TriTile inverse_child(const Ring& ring, const TriTile& t, Letter l);

// One step of the midpoint rule on the whole patch; side doubles, order increments.
TriPatch refine(const TriPatch& patch);
TriPatch refine(const TriPatch& patch, int steps);

TriPatch supertile(const Ring& ring, const TriTile& t, int k);

TriTile tile_at_word(const Ring& ring, const TriTile& root, const PositionWord& w);
TriTile root_from_tile(const Ring& ring, const TriTile& t, const PositionWord& w);

// Where the sub-supertile addressed by w sits inside a supertile of side n,
// in the patch's stored frame: its slot points are origin + sign*(a, b).
struct Placement {
    Point origin;
    int sign = 1;
    int side = 0;
    int alpha_count = 0;

    std::array<Point, 3> corners() const noexcept;
    Point map(int a, int b) const noexcept { return {origin.i + sign * a, origin.j + sign * b}; }
};

Placement locate(const PositionWord& w, int side);

// Tile at w when |w| equals the patch order (side 2^|w|).
TriTile lookup_tile(const TriPatch& patch, const PositionWord& w);

// Sub-supertile at w, re-read in its own frame; equals supertile(tile_at_word(root, w), k - |w|).
TriPatch sub_supertile(const TriPatch& patch, const PositionWord& w);

// Order index k with side == 2^k, or -1.
int log2_side(int side) noexcept;

}  // namespace stern
