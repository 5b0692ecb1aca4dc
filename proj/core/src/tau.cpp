#include "stern/tau.hpp"

namespace stern {

BinaryWord parse_binary(std::string_view bits) {
    BinaryWord w;
    for (char c : bits) {
        if (c != '0' && c != '1') throw Error(ErrorKind::parse_error, "binary word must use 0 and 1 only");
        w.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return w;
}

BinaryWord binary_word(std::uint64_t n, int length) {
    if (length < 0 || length > 64) throw Error(ErrorKind::invalid_argument, "binary length must lie in [0, 64]");
    if (length < 64 && (n >> length) != 0)
        throw Error(ErrorKind::invalid_argument,
                    std::to_string(n) + " needs more than " + std::to_string(length) + " bits");
    BinaryWord w(static_cast<std::size_t>(length));
    for (int k = length - 1; k >= 0; --k) {
        w[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(n & 1U);
        n >>= 1;
    }
    return w;
}

std::uint64_t binary_value(const BinaryWord& w) {
    if (w.size() > 64) throw Error(ErrorKind::invalid_argument, "binary word longer than 64 bits");
    std::uint64_t n = 0;
    for (auto b : w) n = (n << 1) | b;
    return n;
}

Mat2 l_matrix(const Ring& ring) { return make_mat<2>(ring, {{{1, 1}, {0, 1}}}); }
Mat2 r_matrix(const Ring& ring) { return make_mat<2>(ring, {{{1, 0}, {1, 1}}}); }

Mat2 binary_matrix(const Ring& ring, const BinaryWord& w) {
    const Mat2 L = l_matrix(ring), R = r_matrix(ring);
    Mat2 m = Mat2::identity();
    for (auto b : w) m = mat_mul(ring, m, b ? R : L);
    return m;
}

SegChildren tau_children(const Ring& ring, const SegTile& t) {
    const Value mid = ring.add(t.x, t.y);
    return {{t.x, mid}, {mid, t.y}};
}

SegPatch tau_word(const Ring& ring, const SegTile& t, int k) {
    if (k < 0 || k > 26) throw Error(ErrorKind::invalid_argument, "tau order must lie in [0, 26]");
    std::vector<Value> cur{ring.reduce(t.x), ring.reduce(t.y)};
    for (int step = 0; step < k; ++step) {
        std::vector<Value> next(2 * cur.size() - 1);
        for (std::size_t n = 0; n + 1 < cur.size(); ++n) {
            next[2 * n] = cur[n];
            next[2 * n + 1] = ring.add(cur[n], cur[n + 1]);
        }
        next.back() = cur.back();
        cur = std::move(next);
    }
    return {ring, k, std::move(cur)};
}

SegTile tile_at_binary(const Ring& ring, const SegTile& root, const BinaryWord& w) {
    SegTile t = root;
    for (auto b : w) {
        const auto ch = tau_children(ring, t);
        t = b ? ch.right : ch.left;
    }
    return t;
}

std::pair<std::uint64_t, std::uint64_t> fusc_pair(std::uint64_t n) noexcept {
    // Invariant: (a, b) = (fusc(m), fusc(m + 1)) for the prefix m read so far.
    std::uint64_t a = 0, b = 1;
    for (int bit = 63; bit >= 0; --bit) {
        if ((n >> bit) & 1U) a += b;
        else b += a;
    }
    return {a, b};
}

std::uint64_t fusc(std::uint64_t n) noexcept { return fusc_pair(n).first; }

Value fusc(std::uint64_t n, const Ring& ring) noexcept {
    Value a = 0, b = ring.reduce(1);
    for (int bit = 63; bit >= 0; --bit) {
        if ((n >> bit) & 1U) a = ring.add(a, b);
        else b = ring.add(b, a);
    }
    return a;
}

SegPatch v_word(const Ring& ring, Value y, int k) { return tau_word(ring, {0, y}, k); }

SegPatch w_word(const Ring& ring, const SegTile& t, int k) {
    ring.require_odd_prime("w_word");
    const std::uint64_t steps = static_cast<std::uint64_t>(k) * ring.modulus();
    if (k < 0 || steps > 26) throw Error(ErrorKind::invalid_argument, "w_word needs 0 <= k*p <= 26");
    SegPatch w = tau_word(ring, t, static_cast<int>(steps));
    w.order = k;
    return w;
}

std::optional<std::size_t> least_period(const std::vector<Value>& word, std::size_t max_period) {
    if (max_period >= word.size())
        throw Error(ErrorKind::invalid_argument, "max period must be shorter than the word");
    for (std::size_t q = 1; q <= max_period; ++q) {
        bool periodic = true;
        for (std::size_t n = 0; n + q < word.size(); ++n)
            if (word[n] != word[n + q]) {
                periodic = false;
                break;
            }
        if (periodic) return q;
    }
    return std::nullopt;
}

std::string to_csv(const SegPatch& word) {
    std::string s;
    for (std::size_t n = 0; n < word.values.size(); ++n) {
        if (n) s += ',';
        s += std::to_string(word.values[n]);
    }
    return s;
}

}  // namespace stern
