#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "stern/error.hpp"

namespace stern {

// Residues are stored in 16 bits; patches hold millions of them.
using Value = std::uint16_t;

bool is_prime(std::uint64_t n) noexcept;

// Z/m with canonical representatives in [0, m). Cheap to copy.
class Ring {
public:
    static constexpr std::uint32_t max_modulus = 65535;

    explicit Ring(std::uint32_t modulus);

    std::uint32_t modulus() const noexcept { return m_; }
    bool is_odd_prime() const noexcept { return odd_prime_; }

    // Fails fast for operations whose correctness depends on m being an odd prime.
    void require_odd_prime(std::string_view operation) const;

    Value reduce(std::int64_t v) const noexcept {
        auto r = v % static_cast<std::int64_t>(m_);
        return static_cast<Value>(r < 0 ? r + m_ : r);
    }
    Value add(Value a, Value b) const noexcept {
        std::uint32_t s = std::uint32_t{a} + b;
        return static_cast<Value>(s >= m_ ? s - m_ : s);
    }
    Value sub(Value a, Value b) const noexcept {
        return static_cast<Value>(a >= b ? a - b : std::uint32_t{a} + m_ - b);
    }
    Value neg(Value a) const noexcept { return static_cast<Value>(a == 0 ? 0 : m_ - a); }
    Value mul(Value a, Value b) const noexcept {
        return static_cast<Value>((std::uint32_t{a} * b) % m_);
    }
    Value pow(Value a, std::uint64_t e) const noexcept;

    // Throws NotInvertible when gcd(a, m) != 1.
    Value inv(Value a) const;

    // Least k >= 1 with a^k == 1. Throws NotInvertible when gcd(a, m) != 1.
    std::uint64_t mult_order(Value a) const;

    friend bool operator==(const Ring&, const Ring&) = default;

private:
    std::uint32_t m_;
    bool odd_prime_;
};

template <std::size_t N>
using Row = std::array<Value, N>;

// Small fixed-size square matrices over Z/m. Row vectors multiply on the left.
template <std::size_t N>
struct Mat {
    std::array<std::array<Value, N>, N> e{};

    static constexpr Mat identity() noexcept {
        Mat m;
        for (std::size_t i = 0; i < N; ++i) m.e[i][i] = 1;
        return m;
    }

    constexpr Value operator()(std::size_t r, std::size_t c) const noexcept { return e[r][c]; }

    friend bool operator==(const Mat&, const Mat&) = default;
};

using Mat2 = Mat<2>;
using Mat3 = Mat<3>;

template <std::size_t N>
Mat<N> make_mat(const Ring& ring, const std::array<std::array<std::int64_t, N>, N>& entries) {
    Mat<N> m;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) m.e[r][c] = ring.reduce(entries[r][c]);
    return m;
}

template <std::size_t N>
Mat<N> mat_mul(const Ring& ring, const Mat<N>& a, const Mat<N>& b) {
    Mat<N> out;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < N; ++k) acc += std::uint64_t{a.e[r][k]} * b.e[k][c];
            out.e[r][c] = static_cast<Value>(acc % ring.modulus());
        }
    return out;
}

template <std::size_t N>
Row<N> row_mul(const Ring& ring, const Row<N>& row, const Mat<N>& m) {
    Row<N> out{};
    for (std::size_t c = 0; c < N; ++c) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < N; ++k) acc += std::uint64_t{row[k]} * m.e[k][c];
        out[c] = static_cast<Value>(acc % ring.modulus());
    }
    return out;
}

template <std::size_t N>
Mat<N> mat_pow(const Ring& ring, Mat<N> base, std::uint64_t k) {
    Mat<N> acc = Mat<N>::identity();
    while (k > 0) {
        if (k & 1U) acc = mat_mul(ring, acc, base);
        base = mat_mul(ring, base, base);
        k >>= 1U;
    }
    return acc;
}

namespace detail {

// Determinant over the integers of a matrix given as signed entries; N <= 3.
template <std::size_t N>
std::int64_t int_det(const std::array<std::array<std::int64_t, N>, N>& a) {
    if constexpr (N == 1) {
        return a[0][0];
    } else if constexpr (N == 2) {
        return a[0][0] * a[1][1] - a[0][1] * a[1][0];
    } else {
        static_assert(N == 3, "only 1x1..3x3 matrices are supported");
        return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
               a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    }
}

template <std::size_t N>
std::array<std::array<std::int64_t, N>, N> widen(const Mat<N>& m) {
    std::array<std::array<std::int64_t, N>, N> w{};
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) w[r][c] = m.e[r][c];
    return w;
}

template <std::size_t N>
std::int64_t int_minor(const Mat<N>& m, std::size_t skip_r, std::size_t skip_c) {
    if constexpr (N == 1) {
        return 1;
    } else {
        std::array<std::array<std::int64_t, N - 1>, N - 1> sub{};
        for (std::size_t r = 0, rr = 0; r < N; ++r) {
            if (r == skip_r) continue;
            for (std::size_t c = 0, cc = 0; c < N; ++c) {
                if (c == skip_c) continue;
                sub[rr][cc++] = m.e[r][c];
            }
            ++rr;
        }
        return int_det<N - 1>(sub);
    }
}

}  // namespace detail

template <std::size_t N>
Value mat_det(const Ring& ring, const Mat<N>& m) {
    return ring.reduce(detail::int_det<N>(detail::widen(m)));
}

// Adjugate over det^-1; valid over any Z/m where det is a unit. Throws SingularMatrix otherwise.
template <std::size_t N>
Mat<N> mat_inv(const Ring& ring, const Mat<N>& m) {
    const Value det = mat_det(ring, m);
    Value det_inv = 0;
    try {
        det_inv = ring.inv(det);
    } catch (const Error&) {
        throw Error(ErrorKind::singular_matrix,
                    "determinant " + std::to_string(det) + " is not a unit mod " +
                        std::to_string(ring.modulus()));
    }
    Mat<N> out;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) {
            std::int64_t cof = detail::int_minor(m, c, r);
            if ((r + c) % 2 == 1) cof = -cof;
            out.e[r][c] = ring.mul(ring.reduce(cof), det_inv);
        }
    return out;
}

template <std::size_t N>
std::string to_string(const Mat<N>& m) {
    std::string s = "[";
    for (std::size_t r = 0; r < N; ++r) {
        s += r == 0 ? "[" : ",[";
        for (std::size_t c = 0; c < N; ++c) {
            if (c) s += ',';
            s += std::to_string(m.e[r][c]);
        }
        s += ']';
    }
    return s + "]";
}

}  // namespace stern
