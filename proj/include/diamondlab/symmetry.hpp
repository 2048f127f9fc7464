#pragma once

// Square isometries acting on patterns (cells move and tiles turn), color
// interchange, and the symmetry checks on G-images of the four-diamond figure.

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "diamondlab/pattern.hpp"

namespace diamondlab {

/// `rot` clockwise quarter-turns followed, when `flip` is set, by the mirror
/// (r, c) -> (r, 3 - c).
struct SquareIsometry {
  int rot = 0;
  bool flip = false;

  /// 0..7 = rot + 4 * flip.
  [[nodiscard]] constexpr int index() const noexcept { return rot + (flip ? 4 : 0); }
  [[nodiscard]] static constexpr SquareIsometry from_index(int i) noexcept { return SquareIsometry{i & 3, (i & 4) != 0}; }
  [[nodiscard]] constexpr bool is_identity() const noexcept { return rot == 0 && !flip; }
  [[nodiscard]] std::string name() const;

  [[nodiscard]] CellCoord map_cell(CellCoord c) const noexcept;
  [[nodiscard]] TileType map_tile(TileType t) const noexcept;

  friend constexpr bool operator==(SquareIsometry, SquareIsometry) = default;
};

[[nodiscard]] std::array<SquareIsometry, 8> all_isometries() noexcept;

/// (a * b) applies b first, then a.
[[nodiscard]] SquareIsometry operator*(SquareIsometry a, SquareIsometry b) noexcept;

[[nodiscard]] Pattern apply_isometry(SquareIsometry iso, const Pattern& p) noexcept;

/// Bit i of a mask stands for SquareIsometry::from_index(i).
struct SymmetryProfile {
  std::uint8_t ordinary = 0;     ///< non-identity isometries fixing p
  std::uint8_t interchange = 0;  ///< isometries g with g(p) = color_interchange(p)

  [[nodiscard]] bool has_symmetry() const noexcept { return ordinary != 0 || interchange != 0; }
  /// e.g. "O{r180}|X{f,r90f}".
  [[nodiscard]] std::string shape() const;

  friend bool operator==(const SymmetryProfile&, const SymmetryProfile&) = default;
};

[[nodiscard]] SymmetryProfile symmetry_profile(const Pattern& p) noexcept;

struct TheoremReport {
  std::size_t total = 0;
  std::size_t ordinary_count = 0;
  std::size_t interchange_only_count = 0;
  std::vector<std::string> failures;
  std::map<std::string, std::size_t> census;  ///< keyed by SymmetryProfile::shape()
  /// How often each isometry appears in an interchange set, by name.
  std::map<std::string, std::size_t> interchange_isometries;
};

/// Profiles every pattern. Throws VerificationError listing the codec string
/// of every pattern with neither kind of symmetry.
[[nodiscard]] TheoremReport verify_theorem(std::span<const Pattern> patterns);

/// Cells (1,1), (1,2), (2,1), (2,2).
inline constexpr std::array<int, 4> kCenterCells{5, 6, 9, 10};

/// True iff one isometry (non-identity for plain symmetry; any, combined
/// with color interchange) fixes both the central 2x2 block and the whole
/// pattern.
[[nodiscard]] bool center_lemma_check(const Pattern& p) noexcept;

}  // namespace diamondlab
