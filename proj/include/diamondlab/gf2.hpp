#pragma once

#include <bit>
#include <cstdint>

namespace diamondlab {

/// GF(2) inner product of two bit vectors.
[[nodiscard]] constexpr std::uint8_t dot(std::uint32_t a, std::uint32_t b) noexcept {
  return static_cast<std::uint8_t>(std::popcount(a & b) & 1);
}

/// A 4x4 grid of bits, bit `cell` set for cell index 4*row + col.
struct BitGrid16 {
  std::uint16_t bits = 0;

  [[nodiscard]] constexpr bool at(int cell) const noexcept { return ((bits >> cell) & 1U) != 0; }
  constexpr void set(int cell, bool value) noexcept {
    if (value) {
      bits = static_cast<std::uint16_t>(bits | (1U << cell));
    } else {
      bits = static_cast<std::uint16_t>(bits & ~(1U << cell));
    }
  }
  [[nodiscard]] constexpr int count() const noexcept { return std::popcount(bits); }

  friend constexpr BitGrid16 operator^(BitGrid16 a, BitGrid16 b) noexcept {
    return BitGrid16{static_cast<std::uint16_t>(a.bits ^ b.bits)};
  }
  friend constexpr auto operator<=>(BitGrid16, BitGrid16) = default;
};

}  // namespace diamondlab
