#include "stern/render.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

namespace stern {

namespace {

constexpr Rgb white{255, 255, 255};

// Integer floor division for possibly negative numerators; d > 0.
std::int64_t floor_div(std::int64_t a, std::int64_t d) noexcept {
    const std::int64_t q = a / d;
    return (a % d != 0 && a < 0) ? q - 1 : q;
}

Rgb hue(int degrees) {
    const int h = degrees % 360;
    const int sector = h / 60;
    const int f = (h % 60) * 255 / 60;
    const auto up = static_cast<std::uint8_t>(f), down = static_cast<std::uint8_t>(255 - f);
    switch (sector) {
        case 0: return {255, up, 0};
        case 1: return {down, 255, 0};
        case 2: return {0, 255, up};
        case 3: return {0, down, 255};
        case 4: return {up, 0, 255};
        default: return {255, 0, down};
    }
}

struct Canvas {
    Image img;
    Canvas(int w, int h) {
        img.width = w;
        img.height = h;
        img.pixels.assign(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), white);
    }
    void fill(int x0, int y0, int w, int h, Rgb c) {
        for (int y = std::max(0, y0); y < std::min(img.height, y0 + h); ++y)
            for (int x = std::max(0, x0); x < std::min(img.width, x0 + w); ++x)
                img.pixels[static_cast<std::size_t>(y) * static_cast<std::size_t>(img.width) + static_cast<std::size_t>(x)] = c;
    }
    void put(int x, int y, Rgb c) {
        img.pixels[static_cast<std::size_t>(y) * static_cast<std::size_t>(img.width) + static_cast<std::size_t>(x)] = c;
    }
};

// Row height of one lattice row: round(s * sqrt 3) in pixels.
int row_height(int s) { return (s * 1732 + 500) / 1000; }

void half_turn(Image& img) { std::reverse(img.pixels.begin(), img.pixels.end()); }

Image raster_tri(const TriPatch& p, const RenderOptions& o, const std::vector<Rgb>& pal) {
    const int s = o.scale, H = row_height(s), n = p.side();
    const bool hex = p.shape() == PatchShape::hex;
    const int c0 = hex ? 2 * n : 0;
    const int rows = hex ? 2 * n + 1 : n + 1;
    Canvas cv(s * (hex ? 4 * n + 2 : 2 * n + 2), H * rows);
    if (o.fill == FillMode::points) {
        // Brick of 2s x H centred on each point; alternate rows shift by s.
        for (int j = p.j_min(); j <= p.j_max(); ++j)
            for (int i = p.i_min(j); i <= p.i_max(j); ++i)
                cv.fill((2 * i + j + c0) * s, (n - j) * H, 2 * s, H, pal[p.get(i, j)]);
    } else {
        // Exact nearest-corner test in units of 1 / (4 s H) lattice steps.
        const std::int64_t D = 4LL * s * H;
        for (int py = 0; py < cv.img.height; ++py)
            for (int px = 0; px < cv.img.width; ++px) {
                const std::int64_t J = 2LL * s * (2LL * n * H + H - 2LL * py - 1);
                const std::int64_t I = std::int64_t{H} * (2 * px + 1) - 2LL * s * H * (1 + c0) -
                                       std::int64_t{s} * (2LL * n * H + H - 2LL * py - 1);
                const std::int64_t i0 = floor_div(I, D), j0 = floor_div(J, D);
                const std::int64_t fi = I - i0 * D, fj = J - j0 * D;
                const bool up = fi + fj < D;
                const Orientation local = up ? Orientation::up : Orientation::down;
                if (!has_tile(p, static_cast<int>(i0), static_cast<int>(j0), local)) continue;
                const auto pts = tile_points(static_cast<int>(i0), static_cast<int>(j0), local);
                const std::array<std::int64_t, 3> w =
                    up ? std::array<std::int64_t, 3>{D - fi - fj, fi, fj}
                       : std::array<std::int64_t, 3>{fi + fj - D, D - fi, D - fj};
                const std::size_t best = static_cast<std::size_t>(std::max_element(w.begin(), w.end()) - w.begin());
                cv.put(px, py, pal[p.get(pts[best].i, pts[best].j)]);
            }
    }
    if (!hex && p.orientation() == Orientation::down) half_turn(cv.img);
    return std::move(cv.img);
}

Image raster_square(const SquarePatch& p, const RenderOptions& o, const std::vector<Rgb>& pal) {
    const int s = o.scale, n = p.side();
    Canvas cv(2 * s * (n + 1), 2 * s * (n + 1));
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i) cv.fill(2 * s * i, 2 * s * (n - j), 2 * s, 2 * s, pal[p.get(i, j)]);
    return std::move(cv.img);
}

Image raster_segment(const SegPatch& p, const RenderOptions& o, const std::vector<Rgb>& pal) {
    const int s = o.scale;
    Canvas cv(2 * s * static_cast<int>(p.values.size()), 8 * s);
    for (std::size_t k = 0; k < p.values.size(); ++k) cv.fill(2 * s * static_cast<int>(k), 0, 2 * s, 8 * s, pal[p.values[k]]);
    return std::move(cv.img);
}

Image raster_mesh(const RightTriangleMesh& m, const RenderOptions& o, const std::vector<Rgb>& pal) {
    std::int64_t max_x = 1, max_y = 1;
    for (const auto& q : m.points) {
        max_x = std::max(max_x, q[0]);
        max_y = std::max(max_y, q[1]);
    }
    const int s = o.scale;
    Canvas cv(static_cast<int>(max_x * s), static_cast<int>(max_y * s));
    // Pixel centres and vertices in units of 1 / (2 s).
    for (const auto& tri : m.triangles) {
        std::array<std::array<std::int64_t, 2>, 3> v{};
        for (int k = 0; k < 3; ++k)
            v[static_cast<std::size_t>(k)] = {2 * s * m.points[tri[static_cast<std::size_t>(k)]][0],
                                              2 * s * m.points[tri[static_cast<std::size_t>(k)]][1]};
        auto edge = [](const std::array<std::int64_t, 2>& a, const std::array<std::int64_t, 2>& b, std::int64_t x,
                       std::int64_t y) { return (b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0]); };
        const std::int64_t area = edge(v[0], v[1], v[2][0], v[2][1]);
        const std::int64_t lo_x = std::min({v[0][0], v[1][0], v[2][0]}) / 2, hi_x = std::max({v[0][0], v[1][0], v[2][0]}) / 2;
        const std::int64_t lo_y = std::min({v[0][1], v[1][1], v[2][1]}) / 2, hi_y = std::max({v[0][1], v[1][1], v[2][1]}) / 2;
        for (std::int64_t y = lo_y; y < hi_y; ++y)
            for (std::int64_t x = lo_x; x < hi_x; ++x) {
                const std::int64_t X = 2 * x + 1, Y = 2 * y + 1;
                std::int64_t e0 = edge(v[1], v[2], X, Y), e1 = edge(v[2], v[0], X, Y), e2 = edge(v[0], v[1], X, Y);
                if (area < 0) {
                    e0 = -e0;
                    e1 = -e1;
                    e2 = -e2;
                }
                if (e0 < 0 || e1 < 0 || e2 < 0) continue;
                // Largest barycentric weight marks the nearest corner.
                const std::array<std::int64_t, 3> w{e0, e1, e2};
                const auto best = static_cast<std::size_t>(std::max_element(w.begin(), w.end()) - w.begin());
                cv.put(static_cast<int>(x), static_cast<int>(cv.img.height - 1 - y), pal[m.values[tri[best]]]);
            }
    }
    return std::move(cv.img);
}

std::string ppm(const Image& img) {
    std::string out = "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
    out.reserve(out.size() + img.pixels.size() * 3);
    for (const Rgb& c : img.pixels) {
        out += static_cast<char>(c.r);
        out += static_cast<char>(c.g);
        out += static_cast<char>(c.b);
    }
    return out;
}

std::string hex_colour(Rgb c) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
    return buf;
}

struct Svg {
    std::string body;
    void polygon(const std::vector<std::array<std::int64_t, 2>>& pts, Rgb c) {
        body += "<polygon points=\"";
        for (std::size_t k = 0; k < pts.size(); ++k) {
            if (k) body += ' ';
            body += std::to_string(pts[k][0]) + "," + std::to_string(pts[k][1]);
        }
        body += "\" fill=\"" + hex_colour(c) + "\"/>\n";
    }
    void rect(std::int64_t x, std::int64_t y, std::int64_t w, std::int64_t h, Rgb c) {
        body += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) + "\" width=\"" + std::to_string(w) +
                "\" height=\"" + std::to_string(h) + "\" fill=\"" + hex_colour(c) + "\"/>\n";
    }
    std::string finish(std::int64_t w, std::int64_t h, const char* y_scale, int scale) const {
        const std::string sw = std::to_string(w * scale), sh = std::to_string(h * scale);
        std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                          "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + sw +
                          "\" height=\"" + sh + "\" viewBox=\"0 0 " + std::to_string(w) + " " + std::to_string(h) +
                          "\" shape-rendering=\"crispEdges\">\n<g transform=\"scale(1," + y_scale + ")\">\n";
        return out + body + "</g>\n</svg>\n";
    }
};

using P2 = std::array<std::int64_t, 2>;

P2 mid(P2 a, P2 b) { return {(a[0] + b[0]) / 2, (a[1] + b[1]) / 2}; }

// Three kites per triangle, each coloured by its corner.
void kites(Svg& svg, const std::array<P2, 3>& c, const std::array<Rgb, 3>& col) {
    const P2 g{(c[0][0] + c[1][0] + c[2][0]) / 3, (c[0][1] + c[1][1] + c[2][1]) / 3};
    for (std::size_t k = 0; k < 3; ++k) {
        const P2& a = c[k];
        const P2& b = c[(k + 1) % 3];
        const P2& d = c[(k + 2) % 3];
        svg.polygon({a, mid(a, b), g, mid(a, d)}, col[k]);
    }
}

std::string svg_tri(const TriPatch& p, const RenderOptions& o, const std::vector<Rgb>& pal) {
    // Lattice point (i, j) -> (12 i + 6 j, 12 (n - j)), then y scaled by sqrt(3)/2.
    const int n = p.side();
    const bool hex = p.shape() == PatchShape::hex;
    const std::int64_t W = hex ? 24LL * n : 12LL * n, Hh = hex ? 24LL * n : 12LL * n;
    const bool turn = !hex && p.orientation() == Orientation::down;
    auto map = [&](Point q) -> P2 {
        P2 v{12LL * q.i + 6LL * q.j + (hex ? 12LL * n : 0), 12LL * (n - q.j)};
        if (turn) v = {W - v[0], Hh - v[1]};
        return v;
    };
    Svg svg;
    for_each_tile(p, [&](int i, int j, Orientation local, const TriTile&) {
        const auto pts = tile_points(i, j, local);
        kites(svg, {map(pts[0]), map(pts[1]), map(pts[2])},
              {pal[p.get(pts[0].i, pts[0].j)], pal[p.get(pts[1].i, pts[1].j)], pal[p.get(pts[2].i, pts[2].j)]});
    });
    if (n == 0) svg.rect(0, 0, 1, 1, pal[p.get(0, 0)]);
    return svg.finish(std::max<std::int64_t>(W, 1), std::max<std::int64_t>((Hh * 866 + 999) / 1000, 1), "0.8660254",
                      std::max(1, o.scale / 2));
}

std::string svg_square(const SquarePatch& p, const RenderOptions& o, const std::vector<Rgb>& pal) {
    const int n = p.side();
    Svg svg;
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i) svg.rect(2LL * i, 2LL * (n - j), 2, 2, pal[p.get(i, j)]);
    return svg.finish(2LL * (n + 1), 2LL * (n + 1), "1", o.scale);
}

std::string svg_segment(const SegPatch& p, const RenderOptions& o, const std::vector<Rgb>& pal) {
    Svg svg;
    for (std::size_t k = 0; k < p.values.size(); ++k) svg.rect(2LL * static_cast<std::int64_t>(k), 0, 2, 8, pal[p.values[k]]);
    return svg.finish(2LL * static_cast<std::int64_t>(p.values.size()), 8, "1", o.scale);
}

std::string svg_mesh(const RightTriangleMesh& m, const RenderOptions& o, const std::vector<Rgb>& pal) {
    std::int64_t max_x = 1, max_y = 1;
    for (const auto& q : m.points) {
        max_x = std::max(max_x, q[0]);
        max_y = std::max(max_y, q[1]);
    }
    auto map = [&](std::uint32_t k) -> P2 { return {6 * m.points[k][0], 6 * (max_y - m.points[k][1])}; };
    Svg svg;
    for (const auto& t : m.triangles)
        kites(svg, {map(t[0]), map(t[1]), map(t[2])}, {pal[m.values[t[0]]], pal[m.values[t[1]]], pal[m.values[t[2]]]});
    return svg.finish(6 * max_x, 6 * max_y, "1", std::max(1, o.scale / 3));
}

std::uint32_t modulus_of(const AnyPatch& patch) {
    return std::visit(
        [](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, TriPatch> || std::is_same_v<T, SquarePatch>) return p.ring().modulus();
            else return p.ring.modulus();
        },
        patch);
}

}  // namespace

std::vector<Rgb> palette(std::uint32_t modulus) {
    if (modulus == 3) return {white, {0, 0, 255}, {255, 0, 0}};
    if (modulus == 5) return {white, {0, 255, 255}, {255, 0, 255}, {255, 255, 0}, {0, 0, 0}};
    std::vector<Rgb> pal{white};
    for (std::uint32_t v = 1; v < modulus; ++v) pal.push_back(hue(static_cast<int>(360 * (v - 1) / (modulus - 1))));
    return pal;
}

ImageFormat parse_image_format(std::string_view name) {
    if (name == "ppm") return ImageFormat::ppm;
    if (name == "svg") return ImageFormat::svg;
    throw Error(ErrorKind::unsupported_format, "image format must be ppm or svg, got \"" + std::string(name) + "\"");
}

FillMode parse_fill(std::string_view name) {
    if (name == "points") return FillMode::points;
    if (name == "tiles") return FillMode::tiles;
    throw Error(ErrorKind::invalid_argument, "fill must be points or tiles, got \"" + std::string(name) + "\"");
}

Image rasterize(const AnyPatch& patch, const RenderOptions& options) {
    if (options.scale < 1 || options.scale > 64) throw Error(ErrorKind::invalid_argument, "scale must lie in [1, 64]");
    const auto pal = palette(modulus_of(patch));
    return std::visit(
        [&](const auto& p) -> Image {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, TriPatch>) return raster_tri(p, options, pal);
            else if constexpr (std::is_same_v<T, SquarePatch>) return raster_square(p, options, pal);
            else if constexpr (std::is_same_v<T, SegPatch>) return raster_segment(p, options, pal);
            else return raster_mesh(p, options, pal);
        },
        patch);
}

std::string render(const AnyPatch& patch, const RenderOptions& options) {
    if (options.format == ImageFormat::ppm) return ppm(rasterize(patch, options));
    if (options.scale < 1 || options.scale > 64) throw Error(ErrorKind::invalid_argument, "scale must lie in [1, 64]");
    const auto pal = palette(modulus_of(patch));
    return std::visit(
        [&](const auto& p) -> std::string {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, TriPatch>) return svg_tri(p, options, pal);
            else if constexpr (std::is_same_v<T, SquarePatch>) return svg_square(p, options, pal);
            else if constexpr (std::is_same_v<T, SegPatch>) return svg_segment(p, options, pal);
            else return svg_mesh(p, options, pal);
        },
        patch);
}

}  // namespace stern
