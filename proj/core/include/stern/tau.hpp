#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stern/lattice.hpp"
#include "stern/ring.hpp"

namespace stern {

// First bit most significant; bit 0 picks the left child.
using BinaryWord = std::vector<std::uint8_t>;

BinaryWord parse_binary(std::string_view bits);
BinaryWord binary_word(std::uint64_t n, int length);
std::uint64_t binary_value(const BinaryWord& w);

Mat2 l_matrix(const Ring& ring);
Mat2 r_matrix(const Ring& ring);
Mat2 binary_matrix(const Ring& ring, const BinaryWord& w);

struct SegChildren {
    SegTile left, right;
};

SegChildren tau_children(const Ring& ring, const SegTile& t);

// tau^k(t) as 2^k + 1 endpoint values.
SegPatch tau_word(const Ring& ring, const SegTile& t, int k);

SegTile tile_at_binary(const Ring& ring, const SegTile& root, const BinaryWord& w);

// Stern's diatomic sequence. Exact for n < 2^63 (values stay below 2^44).
std::uint64_t fusc(std::uint64_t n) noexcept;
Value fusc(std::uint64_t n, const Ring& ring) noexcept;
// (fusc(n), fusc(n + 1)) in one descent.
std::pair<std::uint64_t, std::uint64_t> fusc_pair(std::uint64_t n) noexcept;

SegPatch v_word(const Ring& ring, Value y, int k);
// tau^{kp}(t); needs p odd prime.
SegPatch w_word(const Ring& ring, const SegTile& t, int k);

// Least q in [1, max_period] with word[n] == word[n + q] for all n, or nullopt.
std::optional<std::size_t> least_period(const std::vector<Value>& word, std::size_t max_period);

std::string to_csv(const SegPatch& word);

}  // namespace stern
