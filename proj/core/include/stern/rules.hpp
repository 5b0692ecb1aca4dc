#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stern/lattice.hpp"
#include "stern/ring.hpp"

namespace stern {

enum class RuleId : std::uint8_t { sigma, sigma1, sigma2, sigma3, sigma4, sigma5, sigma6, sigma7 };

constexpr std::array<RuleId, 8> all_rules{RuleId::sigma,  RuleId::sigma1, RuleId::sigma2, RuleId::sigma3,
                                          RuleId::sigma4, RuleId::sigma5, RuleId::sigma6, RuleId::sigma7};

RuleId parse_rule(std::string_view name);
std::string_view to_string(RuleId id) noexcept;

enum class Geometry : std::uint8_t { triangle, square, right_triangle };

// Value of a refined point over the parent's corner slots.
// linear:   sum coef[s] * corner[s]
// monomial: prod corner[s]^coef[s]
struct Formula {
    enum class Kind : std::uint8_t { linear, monomial };
    Kind kind = Kind::linear;
    std::array<std::int8_t, 4> coef{};

    Value eval(const Ring& ring, const Value* corners, std::size_t count) const noexcept;
    friend bool operator==(const Formula&, const Formula&) = default;
};

std::string to_string(const Formula& f, std::string_view corner_names);

// Local coordinates:
//   triangle:       (a, b), a + b <= scale; corners x=(0,0), y=(scale,0), z=(0,scale).
//   square:         (a, b) in [0, scale]^2, b = 0 bottom; w=(0,s) x=(s,s) y=(0,0) z=(s,0).
//   right_triangle: quarter units; x=(0,0), y=(4,0), z=(2,2) with z the right-angle apex.
struct PointRule {
    int a = 0;
    int b = 0;
    Formula formula;
};

struct SubstRule {
    RuleId id = RuleId::sigma;
    Geometry geometry = Geometry::triangle;
    int scale = 2;
    std::vector<PointRule> points;
    // right_triangle only: children as indices into points, (hypotenuse, hypotenuse, apex).
    std::vector<std::array<std::uint8_t, 3>> children;

    bool additive() const noexcept;
    const Formula& formula_at(int a, int b) const;
};

// Registry of the shipped rules; each is validated on first use.
const SubstRule& variant_rule(RuleId id);

// Symbolically refines a small glued configuration (six triangles around a
// point, a 2x2 block of squares, or two levels of the right-triangle mesh)
// and throws InconsistentRule if any shared point gets two formulas.
void validate_rule(const SubstRule& rule);

// Triangle rules. The down tile uses the half-turn of the up table.
TriPatch refine_with(const SubstRule& rule, const TriPatch& patch);
TriPatch supertile_with(const SubstRule& rule, const Ring& ring, const TriTile& t, int k);

// Square rules.
SquarePatch refine_square(const SubstRule& rule, const SquarePatch& patch);
SquarePatch square_supertile(const SubstRule& rule, const Ring& ring, const SquareTile& t, int k);

// Right-triangle rules; t's corners are (hypotenuse end, hypotenuse end, apex).
RightTriangleMesh right_triangle_seed(const Ring& ring, const TriTile& t);
RightTriangleMesh refine_mesh(const SubstRule& rule, const RightTriangleMesh& mesh);
RightTriangleMesh right_triangle_supertile(const SubstRule& rule, const Ring& ring, const TriTile& t, int k);

}  // namespace stern
