#pragma once

// Tiles, 4x4 patterns, cell coordinates and the GF(4) value coding.
//
// A tile is a square split by one diagonal into a dark and a light triangle.
//   d = 0: "\" diagonal (top-left to bottom-right)
//   d = 1: "/" diagonal (top-right to bottom-left)
//   s = 1: the triangle holding the bottom edge is dark
// Its codec digit is 2*d + s.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "diamondlab/gf2.hpp"

namespace diamondlab {

inline constexpr int kCells = 16;

struct TileType {
  std::uint8_t d = 0;
  std::uint8_t s = 0;

  [[nodiscard]] constexpr int digit() const noexcept { return 2 * d + s; }
  [[nodiscard]] static constexpr TileType from_digit(int digit) noexcept {
    return TileType{static_cast<std::uint8_t>((digit >> 1) & 1), static_cast<std::uint8_t>(digit & 1)};
  }

  friend constexpr auto operator<=>(TileType, TileType) = default;
};

[[nodiscard]] constexpr TileType color_interchange(TileType t) noexcept {
  return TileType{t.d, static_cast<std::uint8_t>(t.s ^ 1U)};
}

/// Colors of the four tile edges (1 = dark). Every edge lies inside one
/// triangle, so each edge carries a single color.
struct EdgeColors {
  std::uint8_t top = 0;
  std::uint8_t bottom = 0;
  std::uint8_t left = 0;
  std::uint8_t right = 0;

  friend constexpr bool operator==(EdgeColors, EdgeColors) = default;
};

[[nodiscard]] constexpr EdgeColors tile_edge_colors(TileType t) noexcept {
  const auto s = t.s;
  const auto sd = static_cast<std::uint8_t>(t.s ^ t.d);
  return EdgeColors{static_cast<std::uint8_t>(s ^ 1U), s, sd, static_cast<std::uint8_t>(sd ^ 1U)};
}

/// Row/column position of a cell. The GF(2)^4 coordinate is (r1, r0, c1, c0)
/// packed most-significant first, which coincides with the row-major index.
struct CellCoord {
  int row = 0;
  int col = 0;

  [[nodiscard]] constexpr int index() const noexcept { return 4 * row + col; }
  [[nodiscard]] constexpr std::uint8_t vec() const noexcept {
    return static_cast<std::uint8_t>(((row >> 1) << 3) | ((row & 1) << 2) | ((col >> 1) << 1) | (col & 1));
  }
  [[nodiscard]] static constexpr CellCoord from_index(int cell) noexcept { return CellCoord{cell / 4, cell % 4}; }
  [[nodiscard]] static constexpr CellCoord from_vec(std::uint8_t v) noexcept {
    return CellCoord{((v >> 3) & 1) * 2 + ((v >> 2) & 1), ((v >> 1) & 1) * 2 + (v & 1)};
  }

  friend constexpr auto operator<=>(CellCoord, CellCoord) = default;
};

/// Coordinate-functional bit masks on GF(2)^4 in (r1, r0, c1, c0) order.
namespace coord {
inline constexpr std::uint8_t kR1 = 0b1000;
inline constexpr std::uint8_t kR0 = 0b0100;
inline constexpr std::uint8_t kC1 = 0b0010;
inline constexpr std::uint8_t kC0 = 0b0001;
}  // namespace coord

class Pattern {
 public:
  constexpr Pattern() = default;
  explicit constexpr Pattern(const std::array<TileType, kCells>& cells) : cells_(cells) {}

  /// Parses 16 characters over {0,1,2,3}; throws ParseError naming the
  /// first offending index.
  [[nodiscard]] static Pattern decode(std::string_view text);
  [[nodiscard]] std::string encode() const;

  /// Pattern whose codec digits are read from `key`, two bits per cell with
  /// cell 0 most significant. Numeric order of keys equals codec order.
  [[nodiscard]] static constexpr Pattern from_key(std::uint32_t key) noexcept {
    Pattern p;
    for (int i = 0; i < kCells; ++i) {
      p.cells_[static_cast<std::size_t>(i)] = TileType::from_digit(static_cast<int>((key >> (2 * (kCells - 1 - i))) & 3U));
    }
    return p;
  }
  [[nodiscard]] constexpr std::uint32_t key() const noexcept {
    std::uint32_t k = 0;
    for (const auto t : cells_) {
      k = (k << 2) | static_cast<std::uint32_t>(t.digit());
    }
    return k;
  }

  [[nodiscard]] constexpr TileType at(int cell) const noexcept { return cells_[static_cast<std::size_t>(cell)]; }
  [[nodiscard]] constexpr TileType at(CellCoord c) const noexcept { return at(c.index()); }
  constexpr void set(int cell, TileType t) noexcept { cells_[static_cast<std::size_t>(cell)] = t; }
  [[nodiscard]] constexpr const std::array<TileType, kCells>& cells() const noexcept { return cells_; }

  /// Occurrences of each tile type, indexed by digit.
  [[nodiscard]] std::array<int, 4> type_counts() const noexcept;

  friend constexpr bool operator==(const Pattern& a, const Pattern& b) noexcept { return a.cells_ == b.cells_; }
  friend constexpr std::strong_ordering operator<=>(const Pattern& a, const Pattern& b) noexcept {
    return a.key() <=> b.key();
  }

 private:
  std::array<TileType, kCells> cells_{};
};

/// The four-diamond figure: every 2x2 quadrant shows a dark diamond centred
/// on the quadrant centre.
[[nodiscard]] Pattern make_diamond_figure();

[[nodiscard]] Pattern color_interchange(const Pattern& p);

/// The three ways of splitting the four tile types into two pairs, each
/// given by a GF(2) function of (d, s).
enum class Component : std::uint8_t { S, D, SD };
inline constexpr std::array<Component, 3> kComponents{Component::S, Component::D, Component::SD};

[[nodiscard]] std::string_view component_name(Component c) noexcept;
[[nodiscard]] BitGrid16 component_map(const Pattern& p, Component c) noexcept;

/// GF(4) = {0, 1, w, w^2} stored as bits (s, d): value = s + 2d, w = (0,1).
class Gf4 {
 public:
  constexpr Gf4() = default;
  [[nodiscard]] static constexpr Gf4 from_bits(std::uint8_t v) noexcept { return Gf4(static_cast<std::uint8_t>(v & 3U)); }
  [[nodiscard]] static constexpr Gf4 zero() noexcept { return Gf4(0); }
  [[nodiscard]] static constexpr Gf4 one() noexcept { return Gf4(1); }
  [[nodiscard]] static constexpr Gf4 omega() noexcept { return Gf4(2); }
  [[nodiscard]] static constexpr Gf4 omega2() noexcept { return Gf4(3); }

  [[nodiscard]] constexpr std::uint8_t bits() const noexcept { return v_; }
  [[nodiscard]] constexpr std::uint8_t s() const noexcept { return v_ & 1U; }
  [[nodiscard]] constexpr std::uint8_t d() const noexcept { return (v_ >> 1) & 1U; }

  friend constexpr Gf4 operator+(Gf4 a, Gf4 b) noexcept { return Gf4(static_cast<std::uint8_t>(a.v_ ^ b.v_)); }
  friend constexpr Gf4 operator*(Gf4 a, Gf4 b) noexcept { return Gf4(kMul[a.v_][b.v_]); }
  /// Multiplicative inverse; zero maps to zero.
  [[nodiscard]] constexpr Gf4 inverse() const noexcept { return Gf4(kInv[v_]); }

  friend constexpr auto operator<=>(Gf4, Gf4) = default;

 private:
  explicit constexpr Gf4(std::uint8_t v) : v_(v) {}

  static constexpr std::uint8_t kMul[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  static constexpr std::uint8_t kInv[4] = {0, 1, 3, 2};

  std::uint8_t v_ = 0;
};

[[nodiscard]] constexpr Gf4 tile_to_gf4(TileType t) noexcept {
  return Gf4::from_bits(static_cast<std::uint8_t>(t.s | (t.d << 1)));
}
[[nodiscard]] constexpr TileType gf4_to_tile(Gf4 v) noexcept { return TileType{v.d(), v.s()}; }

}  // namespace diamondlab
