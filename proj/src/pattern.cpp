#include "diamondlab/pattern.hpp"

#include <algorithm>

#include "diamondlab/error.hpp"

namespace diamondlab {

Pattern Pattern::decode(std::string_view text) {
  for (std::size_t i = 0; i < text.size() && i < kCells; ++i) {
    if (text[i] < '0' || text[i] > '3') {
      throw ParseError("pattern digit must be one of 0,1,2,3", i);
    }
  }
  if (text.size() != kCells) {
    throw ParseError("pattern must have 16 digits, got " + std::to_string(text.size()),
                     std::min<std::size_t>(text.size(), kCells));
  }
  Pattern p;
  for (int i = 0; i < kCells; ++i) {
    p.set(i, TileType::from_digit(text[static_cast<std::size_t>(i)] - '0'));
  }
  return p;
}

std::string Pattern::encode() const {
  std::string out(kCells, '0');
  for (int i = 0; i < kCells; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<char>('0' + at(i).digit());
  }
  return out;
}

std::array<int, 4> Pattern::type_counts() const noexcept {
  std::array<int, 4> counts{};
  for (const auto t : cells_) {
    ++counts[static_cast<std::size_t>(t.digit())];
  }
  return counts;
}

Pattern make_diamond_figure() {
  // s = 1 + r0 and d = 1 + r0 + c0: the dark triangle of every tile touches
  // the centre of its quadrant.
  Pattern p;
  for (int cell = 0; cell < kCells; ++cell) {
    const auto v = CellCoord::from_index(cell).vec();
    const auto r0 = static_cast<std::uint8_t>((v >> 2) & 1U);
    const auto c0 = static_cast<std::uint8_t>(v & 1U);
    p.set(cell, TileType{static_cast<std::uint8_t>(1U ^ r0 ^ c0), static_cast<std::uint8_t>(1U ^ r0)});
  }
  return p;
}

Pattern color_interchange(const Pattern& p) {
  Pattern out;
  for (int i = 0; i < kCells; ++i) {
    out.set(i, color_interchange(p.at(i)));
  }
  return out;
}

std::string_view component_name(Component c) noexcept {
  switch (c) {
    case Component::S:
      return "S";
    case Component::D:
      return "D";
    case Component::SD:
      return "S+D";
  }
  return "?";
}

BitGrid16 component_map(const Pattern& p, Component c) noexcept {
  BitGrid16 grid;
  for (int i = 0; i < kCells; ++i) {
    const auto t = p.at(i);
    const bool bit = c == Component::S ? t.s != 0 : c == Component::D ? t.d != 0 : (t.s ^ t.d) != 0;
    grid.set(i, bit);
  }
  return grid;
}

}  // namespace diamondlab
