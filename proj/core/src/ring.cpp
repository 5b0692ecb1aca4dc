#include "stern/ring.hpp"

#include <numeric>
#include <string>

namespace stern {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Ring::Ring(std::uint32_t modulus) : m_(modulus), odd_prime_(modulus != 2 && is_prime(modulus)) {
    if (modulus < 2 || modulus > max_modulus)
        throw Error(ErrorKind::invalid_argument,
                    "modulus must lie in [2, " + std::to_string(max_modulus) + "], got " +
                        std::to_string(modulus));
}

void Ring::require_odd_prime(std::string_view operation) const {
    if (!odd_prime_)
        throw Error(ErrorKind::not_odd_prime,
                    std::string(operation) + " needs an odd prime modulus, got " + std::to_string(m_));
}

Value Ring::pow(Value a, std::uint64_t e) const noexcept {
    std::uint32_t base = a % m_;
    std::uint32_t acc = 1 % m_;
    while (e > 0) {
        if (e & 1U) acc = (acc * base) % m_;
        base = (base * base) % m_;
        e >>= 1U;
    }
    return static_cast<Value>(acc);
}

Value Ring::inv(Value a) const {
    // Extended Euclid on (a, m).
    std::int64_t r0 = m_, r1 = a % m_;
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    if (r0 != 1)
        throw Error(ErrorKind::not_invertible,
                    std::to_string(a) + " has no inverse mod " + std::to_string(m_));
    return reduce(t0);
}

std::uint64_t Ring::mult_order(Value a) const {
    if (std::gcd(std::uint32_t{a} % m_, m_) != 1)
        throw Error(ErrorKind::not_invertible,
                    std::to_string(a) + " is not a unit mod " + std::to_string(m_));
    Value x = reduce(a);
    std::uint64_t k = 1;
    while (x != 1 % m_) {
        x = mul(x, static_cast<Value>(a % m_));
        ++k;
    }
    return k;
}

}  // namespace stern
