#pragma once

#include <array>
#include <optional>

#include "stern/lattice.hpp"
#include "stern/ring.hpp"
#include "stern/sigma.hpp"

namespace stern {

// alpha^{-k}(t): the root whose k-supertile has t at its centre.
TriTile s_root(const Ring& ring, const TriTile& t, int k);

// s_t(k) = sigma^k(alpha^{-k}(t)).
TriPatch s_patch(const Ring& ring, const TriTile& t, int k);

// Smallest h with A^{2h} = I: 3 for p = 3, ord_p(4) otherwise.
int self_similarity_period(const Ring& ring);

// Centre c ringed by six b's; side 1.
TriPatch hex_seed(const Ring& ring, Value b, Value c);
std::array<TriTile, 6> hex_seed_tiles(const Ring& ring, Value b, Value c);

// h_{b,c}(k) = sigma^{kp}(h_{b,c}); side 2^{kp}.
TriPatch h_patch(const Ring& ring, Value b, Value c, int k);

// The hex of the given side at the centre of a hex patch.
TriPatch central_hex(const TriPatch& hex, int side);

// 60 degrees counter-clockwise about (0, 0).
constexpr Point rotate60(Point q) noexcept { return {-q.j, q.i + q.j}; }
Point rotate60(Point q, int times) noexcept;

// Tile of sector r at position w (sector convention origin at the hex centre).
TriTile h_lookup(const TriPatch& hex, int sector, const PositionWord& w);

// Some lattice point holding c whose six neighbours hold b.
std::optional<Point> find_hex_seed(const TriPatch& patch, Value b, Value c);

// Least k <= k_bound such that h_{b,c} occurs in sigma^k(up 1,1,0); SearchExhausted otherwise.
int hex_seed_reachability(const Ring& ring, Value b, Value c, int k_bound = 12);

}  // namespace stern
