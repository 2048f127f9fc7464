#pragma once

// Helpers and independent oracles shared by the test binaries. Oracles here
// deliberately avoid the library code paths they are used to check.

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "diamondlab/pattern.hpp"
#include "diamondlab/perm_group.hpp"

namespace diamondlab::testing {

inline Pattern random_pattern(std::mt19937_64& rng) {
  return Pattern::from_key(static_cast<std::uint32_t>(rng()));
}

inline const GroupSet& group_g() {
  static const GroupSet g = [] {
    const auto gens = diamond_generators();
    return generate_closure(gens);
  }();
  return g;
}

inline const std::vector<Pattern>& orbit_of_d() {
  static const std::vector<Pattern> o = [] {
    const auto gens = diamond_generators();
    return orbit(make_diamond_figure(), gens);
  }();
  return o;
}

inline const CellPerm& random_element(std::mt19937_64& rng) {
  const auto& g = group_g();
  return g.elements[rng() % g.size()];
}

/// Swap two rows of a codec string.
inline std::string swap_codec_rows(std::string code, int a, int b) {
  for (int c = 0; c < 4; ++c) {
    std::swap(code[static_cast<std::size_t>(4 * a + c)], code[static_cast<std::size_t>(4 * b + c)]);
  }
  return code;
}

/// Every affine map of GF(2)^4, by brute force over all 4x4 matrices.
struct BruteAffine {
  std::array<std::uint8_t, 4> rows{};  // row i is the functional giving output bit i
  std::uint8_t t = 0;

  std::uint8_t apply(std::uint8_t x) const {
    std::uint8_t y = 0;
    for (int i = 0; i < 4; ++i) {
      if (__builtin_parity(rows[static_cast<std::size_t>(i)] & x)) {
        y = static_cast<std::uint8_t>(y | (1U << i));
      }
    }
    return static_cast<std::uint8_t>(y ^ t);
  }
};

/// True iff some invertible affine map agrees with `images` on all 16 points.
inline bool brute_force_is_affine(const std::array<std::uint8_t, 16>& images) {
  for (std::uint32_t m = 0; m < (1U << 16); ++m) {
    BruteAffine a;
    for (int i = 0; i < 4; ++i) {
      a.rows[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((m >> (4 * i)) & 0xF);
    }
    for (std::uint8_t t = 0; t < 16; ++t) {
      a.t = t;
      bool ok = true;
      std::array<bool, 16> hit{};
      for (std::uint8_t x = 0; x < 16 && ok; ++x) {
        const auto y = a.apply(x);
        ok = y == images[x] && !hit[y];
        hit[y] = true;
      }
      if (ok) {
        return true;
      }
    }
  }
  return false;
}

/// Rasterized pattern: 8x8 samples per tile; 1 dark, 0 light, 2 on the
/// diagonal. Built from the geometric tile description only.
inline constexpr int kRaster = 8;
using Raster = std::array<std::array<std::uint8_t, 4 * kRaster>, 4 * kRaster>;

inline Raster rasterize(const Pattern& p) {
  Raster img{};
  for (int y = 0; y < 4 * kRaster; ++y) {
    for (int x = 0; x < 4 * kRaster; ++x) {
      const auto t = p.at(CellCoord{y / kRaster, x / kRaster});
      const int ly = y % kRaster;
      const int lx = x % kRaster;
      std::uint8_t v = 0;
      if (t.d == 0) {  // "\": bottom triangle is below y = x
        v = ly == lx ? 2 : static_cast<std::uint8_t>((ly > lx) == (t.s != 0));
      } else {  // "/": bottom triangle is below y = 1 - x
        v = ly + lx == kRaster - 1 ? 2 : static_cast<std::uint8_t>((ly + lx > kRaster - 1) == (t.s != 0));
      }
      img[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = v;
    }
  }
  return img;
}

/// Clockwise quarter turns then optional left-right mirror of the raster.
inline Raster transform_raster(const Raster& img, int rot, bool flip) {
  constexpr int n = 4 * kRaster;
  Raster cur = img;
  for (int k = 0; k < rot; ++k) {
    Raster next{};
    for (int y = 0; y < n; ++y) {
      for (int x = 0; x < n; ++x) {
        next[static_cast<std::size_t>(x)][static_cast<std::size_t>(n - 1 - y)] =
            cur[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
      }
    }
    cur = next;
  }
  if (flip) {
    Raster next{};
    for (int y = 0; y < n; ++y) {
      for (int x = 0; x < n; ++x) {
        next[static_cast<std::size_t>(y)][static_cast<std::size_t>(n - 1 - x)] =
            cur[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
      }
    }
    cur = next;
  }
  return cur;
}

}  // namespace diamondlab::testing
