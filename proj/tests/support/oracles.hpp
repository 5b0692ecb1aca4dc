#pragma once

// Slow, independent reference implementations used as test oracles. None of
// these touch the library's matrices or refinement code.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

inline std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

// Inverse by exhaustive search; -1 when none exists.
inline std::int64_t brute_inverse(std::int64_t a, std::int64_t m) {
    for (std::int64_t x = 1; x < m; ++x)
        if (mod(a * x, m) == 1) return x;
    return -1;
}

inline std::uint64_t brute_order(std::int64_t a, std::int64_t m) {
    std::int64_t acc = mod(a, m);
    for (std::uint64_t k = 1; k <= static_cast<std::uint64_t>(m); ++k) {
        if (acc == 1) return k;
        acc = mod(acc * a, m);
    }
    return 0;
}

// fusc(0..n) by the defining recurrence.
inline std::vector<std::uint64_t> fusc_table(std::size_t n) {
    std::vector<std::uint64_t> f(n + 1, 0);
    if (n >= 1) f[1] = 1;
    for (std::size_t k = 2; k <= n; ++k) f[k] = (k % 2 == 0) ? f[k / 2] : f[k / 2] + f[k / 2 + 1];
    return f;
}

// Insert x + y between every neighbouring pair, k times.
inline std::vector<std::int64_t> naive_tau(std::int64_t x, std::int64_t y, int k, std::int64_t p) {
    std::vector<std::int64_t> w{mod(x, p), mod(y, p)};
    for (int s = 0; s < k; ++s) {
        std::vector<std::int64_t> next;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            next.push_back(w[i]);
            next.push_back(mod(w[i] + w[i + 1], p));
        }
        next.push_back(w.back());
        w = std::move(next);
    }
    return w;
}

// Recursive per-tile substitution. Points are written in the tile's own frame
// (down tiles half-turned), so the result has the layout of an up triangle of
// side 2^k: key (i, j) with i + j <= 2^k. Every shared corner is asserted to
// receive one value.
class NaiveSigma {
public:
    using Grid = std::map<std::pair<int, int>, std::int64_t>;

    NaiveSigma(std::int64_t p) : p_(p) {}

    Grid run(std::int64_t x, std::int64_t y, std::int64_t z, int k) {
        grid_.clear();
        rec(x, y, z, k, 0, 0, 1);
        return grid_;
    }

private:
    void put(int i, int j, std::int64_t v) {
        auto [it, fresh] = grid_.emplace(std::make_pair(i, j), v);
        if (!fresh && it->second != v)
            throw std::logic_error("shared corner (" + std::to_string(i) + "," + std::to_string(j) + ") disagrees");
    }

    // Corners x, y, z sit at o, o + s(n, 0), o + s(0, n) with n = 2^k.
    void rec(std::int64_t x, std::int64_t y, std::int64_t z, int k, int oi, int oj, int s) {
        const int n = 1 << k;
        if (k == 0) {
            put(oi, oj, x);
            put(oi + s * n, oj, y);
            put(oi, oj + s * n, z);
            return;
        }
        const int h = n / 2;
        const std::int64_t xy = mod(x + y, p_), xz = mod(x + z, p_), yz = mod(y + z, p_);
        rec(x, xy, xz, k - 1, oi, oj, s);                   // beta
        rec(xy, y, yz, k - 1, oi + s * h, oj, s);           // gamma
        rec(xz, yz, z, k - 1, oi, oj + s * h, s);           // delta
        rec(yz, xz, xy, k - 1, oi + s * h, oj + s * h, -s); // alpha, flipped
    }

    std::int64_t p_;
    Grid grid_;
};

// 64-bit FNV-1a.
inline std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace oracle
