#include "stern/sigma.hpp"

namespace stern {

namespace {

Row<3> row_of(const TriTile& t) { return t.corners; }

}  // namespace

PositionWord parse_word(std::string_view text) {
    PositionWord w;
    for (std::size_t k = 0; k < text.size(); ++k) {
        const unsigned char ch = static_cast<unsigned char>(text[k]);
        if (ch == 0xCE && k + 1 < text.size()) {
            const unsigned char next = static_cast<unsigned char>(text[++k]);
            if (next >= 0xB1 && next <= 0xB4) {
                w.push_back(static_cast<Letter>(next - 0xB1));
                continue;
            }
        }
        switch (ch) {
            case 'a': w.push_back(Letter::alpha); break;
            case 'b': w.push_back(Letter::beta); break;
            case 'g': w.push_back(Letter::gamma); break;
            case 'd': w.push_back(Letter::delta); break;
            default:
                throw Error(ErrorKind::parse_error, "unexpected character in position word: " + std::string(text));
        }
    }
    return w;
}

std::string to_string(const PositionWord& w) {
    static constexpr char names[] = {'a', 'b', 'g', 'd'};
    std::string s;
    for (Letter l : w) s += names[static_cast<int>(l)];
    return s;
}

int letter_digit(Letter l, WordConvention convention) noexcept {
    const int plane = static_cast<int>(l);
    if (convention == WordConvention::plane || plane >= 2) return plane;
    return 1 - plane;
}

Letter digit_letter(int digit, WordConvention convention) {
    if (digit < 0 || digit > 3) throw Error(ErrorKind::invalid_argument, "base-4 digit out of range");
    if (convention == WordConvention::sector && digit < 2) digit = 1 - digit;
    return static_cast<Letter>(digit);
}

std::uint64_t encode_word(const PositionWord& w, WordConvention convention) {
    if (w.size() > 32) throw Error(ErrorKind::invalid_argument, "position word longer than 32 letters");
    std::uint64_t n = 0;
    for (Letter l : w) n = n * 4 + static_cast<std::uint64_t>(letter_digit(l, convention));
    return n;
}

PositionWord decode_word(std::uint64_t index, int length, WordConvention convention) {
    if (length < 0 || length > 32) throw Error(ErrorKind::invalid_argument, "word length must lie in [0, 32]");
    if (length < 32 && (index >> (2 * length)) != 0)
        throw Error(ErrorKind::invalid_argument, "position " + std::to_string(index) + " needs more than " +
                                                     std::to_string(length) + " letters");
    PositionWord w(static_cast<std::size_t>(length));
    for (int k = length - 1; k >= 0; --k) {
        w[static_cast<std::size_t>(k)] = digit_letter(static_cast<int>(index & 3U), convention);
        index >>= 2;
    }
    return w;
}

Mat3 letter_matrix(const Ring& ring, Letter l) {
    switch (l) {
        case Letter::alpha: return make_mat<3>(ring, {{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}});
        case Letter::beta: return make_mat<3>(ring, {{{1, 1, 1}, {0, 1, 0}, {0, 0, 1}}});
        case Letter::gamma: return make_mat<3>(ring, {{{1, 0, 0}, {1, 1, 1}, {0, 0, 1}}});
        case Letter::delta: return make_mat<3>(ring, {{{1, 0, 0}, {0, 1, 0}, {1, 1, 1}}});
    }
    return Mat3::identity();
}

Mat3 word_matrix(const Ring& ring, const PositionWord& w) {
    Mat3 m = Mat3::identity();
    for (Letter l : w) m = mat_mul(ring, m, letter_matrix(ring, l));
    return m;
}

const TriTile& Children::operator[](Letter l) const noexcept {
    switch (l) {
        case Letter::alpha: return alpha;
        case Letter::beta: return beta;
        case Letter::gamma: return gamma;
        case Letter::delta: return delta;
    }
    return alpha;
}

Children sigma_children(const Ring& ring, const TriTile& t) {
    const Value x = t.x(), y = t.y(), z = t.z();
    const Value xy = ring.add(x, y), xz = ring.add(x, z), yz = ring.add(y, z);
    const Orientation o = t.orientation;
    return {{flip(o), {yz, xz, xy}}, {o, {x, xy, xz}}, {o, {xy, y, yz}}, {o, {xz, yz, z}}};
}

TriTile child(const Ring& ring, const TriTile& t, Letter l) {
    TriTile c{t.orientation, row_mul(ring, row_of(t), letter_matrix(ring, l))};
    if (l == Letter::alpha) c.orientation = flip(c.orientation);
    return c;
}

TriTile inverse_child(const Ring& ring, const TriTile& t, Letter l) {
    Mat3 inv;
    try {
        inv = mat_inv(ring, letter_matrix(ring, l));
    } catch (const Error&) {
        throw Error(ErrorKind::not_invertible,
                    "the alpha matrix is singular mod " + std::to_string(ring.modulus()));
    }
    TriTile p{t.orientation, row_mul(ring, row_of(t), inv)};
    if (l == Letter::alpha) p.orientation = flip(p.orientation);
    return p;
}

TriPatch refine(const TriPatch& patch) {
    const Ring& r = patch.ring();
    const int n2 = patch.side() * 2;
    TriPatch out = patch.shape() == PatchShape::hex
                       ? TriPatch::hex(r, n2, patch.order() + 1)
                       : TriPatch::triangle(r, patch.orientation(), n2, patch.order() + 1);
    for (int J = out.j_min(); J <= out.j_max(); ++J) {
        const int lo = out.i_min(J), hi = out.i_max(J);
        if ((J & 1) == 0) {
            const int j = J >> 1;
            for (int I = lo; I <= hi; ++I) {
                const int i = I >> 1;
                out.ref(I, J) = (I & 1) == 0 ? patch.get(i, j) : r.add(patch.get(i, j), patch.get(i + 1, j));
            }
        } else {
            const int j = J >> 1;  // floor((J-1)/2)
            for (int I = lo; I <= hi; ++I) {
                const int i = I >> 1;
                out.ref(I, J) = (I & 1) == 0 ? r.add(patch.get(i, j), patch.get(i, j + 1))
                                             : r.add(patch.get(i + 1, j), patch.get(i, j + 1));
            }
        }
    }
    return out;
}

TriPatch refine(const TriPatch& patch, int steps) {
    if (steps < 0) throw Error(ErrorKind::invalid_argument, "refinement steps must be non-negative");
    TriPatch p = patch;
    for (int s = 0; s < steps; ++s) p = refine(p);
    return p;
}

TriPatch supertile(const Ring& ring, const TriTile& t, int k) {
    if (k < 0 || k > 13) throw Error(ErrorKind::invalid_argument, "supertile order must lie in [0, 13]");
    return refine(patch_of_tile(ring, t), k);
}

TriTile tile_at_word(const Ring& ring, const TriTile& root, const PositionWord& w) {
    TriTile t = root;
    for (Letter l : w) t = child(ring, t, l);
    return t;
}

TriTile root_from_tile(const Ring& ring, const TriTile& t, const PositionWord& w) {
    TriTile s = t;
    for (auto it = w.rbegin(); it != w.rend(); ++it) s = inverse_child(ring, s, *it);
    return s;
}

std::array<Point, 3> Placement::corners() const noexcept { return {map(0, 0), map(side, 0), map(0, side)}; }

Placement locate(const PositionWord& w, int side) {
    Placement pl{{0, 0}, 1, side, 0};
    for (Letter l : w) {
        if (pl.side % 2 != 0) throw Error(ErrorKind::out_of_bounds, "position word longer than the supertile order");
        const int h = pl.side / 2;
        switch (l) {
            case Letter::alpha:
                pl.origin = pl.map(h, h);
                pl.sign = -pl.sign;
                ++pl.alpha_count;
                break;
            case Letter::beta: break;
            case Letter::gamma: pl.origin = pl.map(h, 0); break;
            case Letter::delta: pl.origin = pl.map(0, h); break;
        }
        pl.side = h;
    }
    return pl;
}

TriTile lookup_tile(const TriPatch& patch, const PositionWord& w) {
    if (patch.shape() != PatchShape::triangle)
        throw Error(ErrorKind::shape_mismatch, "position words address triangular supertiles");
    const Placement pl = locate(w, patch.side());
    if (pl.side != 1) throw Error(ErrorKind::invalid_argument, "word length must equal the supertile order");
    if (pl.sign > 0) return tile_at(patch, pl.origin.i, pl.origin.j, Orientation::up);
    return tile_at(patch, pl.origin.i - 1, pl.origin.j - 1, Orientation::down);
}

TriPatch sub_supertile(const TriPatch& patch, const PositionWord& w) {
    if (patch.shape() != PatchShape::triangle)
        throw Error(ErrorKind::shape_mismatch, "position words address triangular supertiles");
    const Placement pl = locate(w, patch.side());
    const Orientation o = pl.sign > 0 ? patch.orientation() : flip(patch.orientation());
    TriPatch out = TriPatch::triangle(patch.ring(), o, pl.side, patch.order() - static_cast<int>(w.size()));
    for (int b = 0; b <= pl.side; ++b)
        for (int a = 0; a + b <= pl.side; ++a) {
            const Point q = pl.map(a, b);
            out.ref(a, b) = patch.get(q.i, q.j);
        }
    return out;
}

int log2_side(int side) noexcept {
    if (side <= 0 || (side & (side - 1)) != 0) return -1;
    int k = 0;
    while ((1 << k) < side) ++k;
    return k;
}

}  // namespace stern
