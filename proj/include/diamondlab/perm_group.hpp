#pragma once

// Permutations of the 16 tile cells and the group G they generate.
//
// Composition convention: (a * b) applies b first, then a.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diamondlab/pattern.hpp"

namespace diamondlab {

inline constexpr std::size_t kDefaultClosureCap = 10'000'000;

class CellPerm {
 public:
  /// Identity.
  constexpr CellPerm() noexcept {
    for (int i = 0; i < kCells; ++i) {
      images_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    }
  }

  /// Throws Error unless `images` is a bijection of {0..15}.
  [[nodiscard]] static CellPerm from_images(std::span<const int> images);
  [[nodiscard]] static constexpr CellPerm from_packed(std::uint64_t packed) noexcept {
    CellPerm g;
    for (int i = 0; i < kCells; ++i) {
      g.images_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((packed >> (4 * (kCells - 1 - i))) & 0xFU);
    }
    return g;
  }

  [[nodiscard]] constexpr int operator()(int cell) const noexcept {
    return images_[static_cast<std::size_t>(cell)];
  }
  [[nodiscard]] constexpr const std::array<std::uint8_t, kCells>& images() const noexcept { return images_; }

  /// Images packed four bits each with cell 0 most significant; numeric
  /// order matches lexicographic order of the image lists.
  [[nodiscard]] constexpr std::uint64_t packed() const noexcept {
    std::uint64_t k = 0;
    for (const auto v : images_) {
      k = (k << 4) | v;
    }
    return k;
  }

  [[nodiscard]] CellPerm inverse() const noexcept;
  [[nodiscard]] bool is_identity() const noexcept { return *this == CellPerm{}; }
  /// Space-separated destination images.
  [[nodiscard]] std::string to_string() const;

  friend CellPerm operator*(const CellPerm& a, const CellPerm& b) noexcept;
  friend constexpr bool operator==(const CellPerm&, const CellPerm&) = default;

 private:
  std::array<std::uint8_t, kCells> images_{};
};

enum class Axis : std::uint8_t { Rows, Cols, Quads };

/// Moves whole rows, columns or 2x2 quadrants (quadrant q = 2*r1 + c1) by
/// `sigma`, keeping each tile's offset inside its quadrant. Throws Error if
/// sigma is not a bijection of {0..3}.
[[nodiscard]] CellPerm axis_perm(Axis axis, const std::array<int, 4>& sigma);

/// A transposition and a 4-cycle for each of rows, columns and quadrants.
[[nodiscard]] std::vector<CellPerm> diamond_generators();

/// Cell g(i) of the result holds the tile that p holds at cell i.
[[nodiscard]] Pattern act(const CellPerm& g, const Pattern& p) noexcept;

struct GroupSet {
  std::vector<CellPerm> elements;  ///< sorted by packed()
  std::vector<CellPerm> generators;
  int depth = 0;                   ///< BFS layers needed to reach every element

  [[nodiscard]] std::size_t size() const noexcept { return elements.size(); }
  [[nodiscard]] bool contains(const CellPerm& g) const noexcept;
  /// One line per element: 16 space-separated images, lexicographic order.
  [[nodiscard]] std::string export_lines() const;
};

/// Breadth-first closure under right multiplication by the generators.
/// Frontiers are processed in sorted order. Throws CapExceeded past `cap`.
[[nodiscard]] GroupSet generate_closure(std::span<const CellPerm> gens, std::size_t cap = kDefaultClosureCap);

/// Orbit of `seed`, sorted by codec string.
[[nodiscard]] std::vector<Pattern> orbit(const Pattern& seed, std::span<const CellPerm> gens,
                                         std::size_t cap = kDefaultClosureCap);

/// x -> M x + t on GF(2)^4. `columns[k]` is M applied to the basis vector 1 << k.
struct AffineMap {
  std::array<std::uint8_t, 4> columns{1, 2, 4, 8};
  std::uint8_t translation = 0;

  [[nodiscard]] std::uint8_t linear(std::uint8_t x) const noexcept;
  [[nodiscard]] std::uint8_t operator()(std::uint8_t x) const noexcept {
    return static_cast<std::uint8_t>(linear(x) ^ translation);
  }
  [[nodiscard]] bool invertible() const noexcept;
  /// Inverse of the linear part (precondition: invertible()).
  [[nodiscard]] AffineMap linear_inverse() const;

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// Reads (M, t) off the images of 0 and the basis vectors, then checks all
/// 16 cells. Empty when g is not affine in cell coordinates.
[[nodiscard]] std::optional<AffineMap> as_affine(const CellPerm& g) noexcept;

/// |AGL(n, 2)| = 2^n * prod_{i<n} (2^n - 2^i). Throws Error for n < 1 or
/// when the result does not fit in 64 bits (n > 7).
[[nodiscard]] std::uint64_t affine_group_order(int n);

}  // namespace diamondlab
