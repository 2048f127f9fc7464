#pragma once

// PG(3,2) seen through linear functionals on cell coordinates: points are
// nonzero functionals, lines are triples {a, b, a+b}. A pattern's three
// component grids are affine functionals whose linear parts form a line.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diamondlab/error.hpp"
#include "diamondlab/gf2.hpp"
#include "diamondlab/pattern.hpp"
#include "diamondlab/perm_group.hpp"

namespace diamondlab {

struct ProjPoint {
  std::uint8_t mask = 1;  ///< 1..15, bits in (r1, r0, c1, c0) order

  [[nodiscard]] std::uint8_t eval(std::uint8_t x) const noexcept { return dot(mask, x); }
  [[nodiscard]] std::string name() const;  ///< e.g. "r0+c0"

  friend constexpr auto operator<=>(ProjPoint, ProjPoint) = default;
};

struct ProjLine {
  std::array<ProjPoint, 3> points{};  ///< ascending

  /// Line through two distinct points. Throws Error if a == b.
  [[nodiscard]] static ProjLine through(ProjPoint a, ProjPoint b);
  [[nodiscard]] bool contains(ProjPoint p) const noexcept;
  [[nodiscard]] std::string name() const;

  friend constexpr auto operator<=>(const ProjLine&, const ProjLine&) = default;
};

[[nodiscard]] std::vector<ProjPoint> points();
/// The 35 lines in ascending order.
[[nodiscard]] std::vector<ProjLine> lines();

/// grid(x) = linear . x + constant, linear possibly zero.
struct AffineForm {
  std::uint8_t linear = 0;
  std::uint8_t constant = 0;

  friend constexpr auto operator<=>(AffineForm, AffineForm) = default;
};

[[nodiscard]] std::optional<AffineForm> fit_affine_form(BitGrid16 grid) noexcept;

struct LineDiagram {
  BitGrid16 grid;
  ProjPoint linear;
  std::uint8_t constant = 0;
};

/// Affine fit with a nonzero linear part (a hyperplane pair of 8/8 cells).
[[nodiscard]] std::optional<LineDiagram> fit_affine_functional(BitGrid16 grid) noexcept;

/// The grid of cells x with f(x) + c = 1.
[[nodiscard]] BitGrid16 diagram_grid(ProjPoint f, std::uint8_t constant) noexcept;

struct Structure {
  ProjLine line;
  std::array<LineDiagram, 3> diagrams{};  ///< indexed like kComponents
};

/// Thrown by structure_of for patterns outside the orbit of D.
class StructureError : public Error {
 public:
  StructureError(const std::string& message, Component component)
      : Error(message), component_(component) {}
  [[nodiscard]] Component component() const noexcept { return component_; }

 private:
  Component component_;
};

[[nodiscard]] Structure structure_of(const Pattern& p);

/// Groups patterns by structure line and checks the 35 x 24 shape: 35 keys
/// equal to lines(), 24 patterns each, all 15 points appearing. Throws
/// VerificationError otherwise.
[[nodiscard]] std::map<ProjLine, std::vector<Pattern>> classify(std::span<const Pattern> orbit_patterns);

/// Image of a line under the action of an affine cell map on functionals:
/// f -> f o M^{-1}.
[[nodiscard]] ProjLine transform_line(const AffineMap& g, const ProjLine& line);

/// Disjointness. Throws Error for equal lines.
[[nodiscard]] bool skew(const ProjLine& a, const ProjLine& b);

using FourPartition = std::array<std::array<std::uint8_t, 4>, 4>;

/// Fibers of x -> (f1(x), f2(x)) for two points of the line; classes and
/// cells ascending.
[[nodiscard]] FourPartition four_partition(const ProjLine& line, int first = 0, int second = 1);
[[nodiscard]] FourPartition four_partition(const Structure& s);

/// Graeco-Latin meeting condition: every class of one meets every class of
/// the other in exactly one cell. Throws Error for equal lines.
[[nodiscard]] bool orthogonal(const ProjLine& a, const ProjLine& b);
[[nodiscard]] bool orthogonal(const Structure& a, const Structure& b);

struct OrthogonalityReport {
  std::size_t pairs = 0;
  std::size_t orthogonal_count = 0;
  std::size_t skew_count = 0;
  std::size_t both = 0;
};

/// Checks orthogonal <=> skew for every unordered pair. Throws
/// VerificationError naming each violating pair.
[[nodiscard]] OrthogonalityReport verify_orthogonality_skewness(std::span<const ProjLine> structures);

/// The 30 affine hyperplanes of the square, as cell masks, ascending.
[[nodiscard]] std::vector<std::uint16_t> hyperplane_sets();

}  // namespace diamondlab
