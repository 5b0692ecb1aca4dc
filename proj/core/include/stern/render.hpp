#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stern/lattice.hpp"

namespace stern {

enum class ImageFormat : std::uint8_t { ppm, svg };
enum class FillMode : std::uint8_t {
    points,  // each lattice point is a cell coloured by its value
    tiles,   // every pixel of a tile takes the colour of its nearest corner
};

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
    friend bool operator==(const Rgb&, const Rgb&) = default;
};

// 0 is white. p = 3: white, blue, red. p = 5: white, cyan, magenta, yellow, black.
// Other moduli: evenly spaced hues.
std::vector<Rgb> palette(std::uint32_t modulus);

struct RenderOptions {
    ImageFormat format = ImageFormat::ppm;
    FillMode fill = FillMode::points;
    int scale = 4;  // pixels per half lattice step
};

ImageFormat parse_image_format(std::string_view name);  // UnsupportedFormat otherwise
FillMode parse_fill(std::string_view name);

// Deterministic bytes: binary PPM (P6) or SVG 1.1.
std::string render(const AnyPatch& patch, const RenderOptions& options = {});

// Raw RGB raster used by the PPM writer; exposed for pixel-level tests.
struct Image {
    int width = 0, height = 0;
    std::vector<Rgb> pixels;
    Rgb at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x)]; }
};

Image rasterize(const AnyPatch& patch, const RenderOptions& options = {});

}  // namespace stern
