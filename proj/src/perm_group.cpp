#include "diamondlab/perm_group.hpp"

#include <algorithm>
#include <unordered_set>

#include "diamondlab/error.hpp"

namespace diamondlab {

CellPerm CellPerm::from_images(std::span<const int> images) {
  if (images.size() != kCells) {
    throw Error("cell permutation needs 16 images, got " + std::to_string(images.size()));
  }
  std::array<bool, kCells> seen{};
  CellPerm g;
  for (std::size_t i = 0; i < kCells; ++i) {
    const int v = images[i];
    if (v < 0 || v >= kCells || seen[static_cast<std::size_t>(v)]) {
      throw Error("cell permutation is not a bijection at position " + std::to_string(i));
    }
    seen[static_cast<std::size_t>(v)] = true;
    g.images_[i] = static_cast<std::uint8_t>(v);
  }
  return g;
}

CellPerm CellPerm::inverse() const noexcept {
  CellPerm inv;
  for (int i = 0; i < kCells; ++i) {
    inv.images_[images_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  }
  return inv;
}

std::string CellPerm::to_string() const {
  std::string out;
  for (int i = 0; i < kCells; ++i) {
    if (i != 0) {
      out += ' ';
    }
    out += std::to_string((*this)(i));
  }
  return out;
}

CellPerm operator*(const CellPerm& a, const CellPerm& b) noexcept {
  CellPerm c;
  for (std::size_t i = 0; i < kCells; ++i) {
    c.images_[i] = a.images_[b.images_[i]];
  }
  return c;
}

CellPerm axis_perm(Axis axis, const std::array<int, 4>& sigma) {
  std::array<bool, 4> seen{};
  for (const int v : sigma) {
    if (v < 0 || v > 3 || seen[static_cast<std::size_t>(v)]) {
      throw Error("axis permutation is not a bijection of {0,1,2,3}");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  std::array<int, kCells> images{};
  for (int cell = 0; cell < kCells; ++cell) {
    auto [r, c] = CellCoord::from_index(cell);
    switch (axis) {
      case Axis::Rows:
        r = sigma[static_cast<std::size_t>(r)];
        break;
      case Axis::Cols:
        c = sigma[static_cast<std::size_t>(c)];
        break;
      case Axis::Quads: {
        const int q = sigma[static_cast<std::size_t>(2 * (r >> 1) + (c >> 1))];
        r = 2 * (q >> 1) + (r & 1);
        c = 2 * (q & 1) + (c & 1);
        break;
      }
    }
    images[static_cast<std::size_t>(cell)] = CellCoord{r, c}.index();
  }
  return CellPerm::from_images(images);
}

std::vector<CellPerm> diamond_generators() {
  std::vector<CellPerm> gens;
  for (const auto axis : {Axis::Rows, Axis::Cols, Axis::Quads}) {
    gens.push_back(axis_perm(axis, {1, 0, 2, 3}));
    gens.push_back(axis_perm(axis, {1, 2, 3, 0}));
  }
  return gens;
}

Pattern act(const CellPerm& g, const Pattern& p) noexcept {
  Pattern out;
  for (int i = 0; i < kCells; ++i) {
    out.set(g(i), p.at(i));
  }
  return out;
}

bool GroupSet::contains(const CellPerm& g) const noexcept {
  return std::binary_search(elements.begin(), elements.end(), g,
                            [](const CellPerm& a, const CellPerm& b) { return a.packed() < b.packed(); });
}

std::string GroupSet::export_lines() const {
  std::string out;
  out.reserve(elements.size() * 40);
  for (const auto& g : elements) {
    out += g.to_string();
    out += '\n';
  }
  return out;
}

GroupSet generate_closure(std::span<const CellPerm> gens, std::size_t cap) {
  GroupSet result;
  result.generators.assign(gens.begin(), gens.end());

  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> frontier{CellPerm{}.packed()};
  std::vector<std::uint64_t> all{frontier};
  seen.insert(frontier.front());

  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (const auto key : frontier) {
      const auto g = CellPerm::from_packed(key);
      for (const auto& s : gens) {
        const auto h = (g * s).packed();
        if (seen.insert(h).second) {
          if (seen.size() > cap) {
            throw CapExceeded("group closure exceeded cap of " + std::to_string(cap) + " elements");
          }
          next.push_back(h);
        }
      }
    }
    if (next.empty()) {
      break;
    }
    std::sort(next.begin(), next.end());
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
    ++result.depth;
  }

  std::sort(all.begin(), all.end());
  result.elements.reserve(all.size());
  for (const auto key : all) {
    result.elements.push_back(CellPerm::from_packed(key));
  }
  return result;
}

std::vector<Pattern> orbit(const Pattern& seed, std::span<const CellPerm> gens, std::size_t cap) {
  std::unordered_set<std::uint32_t> seen{seed.key()};
  std::vector<std::uint32_t> frontier{seed.key()};
  std::vector<std::uint32_t> all{frontier};
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (const auto key : frontier) {
      const auto p = Pattern::from_key(key);
      for (const auto& g : gens) {
        const auto q = act(g, p).key();
        if (seen.insert(q).second) {
          if (seen.size() > cap) {
            throw CapExceeded("orbit exceeded cap of " + std::to_string(cap) + " patterns");
          }
          next.push_back(q);
        }
      }
    }
    std::sort(next.begin(), next.end());
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  std::vector<Pattern> out;
  out.reserve(all.size());
  for (const auto key : all) {
    out.push_back(Pattern::from_key(key));
  }
  return out;
}

std::uint8_t AffineMap::linear(std::uint8_t x) const noexcept {
  std::uint8_t y = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    if ((x >> k) & 1U) {
      y ^= columns[k];
    }
  }
  return y;
}

bool AffineMap::invertible() const noexcept {
  std::array<bool, 16> hit{};
  for (std::uint8_t x = 0; x < 16; ++x) {
    const auto y = linear(x);
    if (hit[y]) {
      return false;
    }
    hit[y] = true;
  }
  return true;
}

AffineMap AffineMap::linear_inverse() const {
  if (!invertible()) {
    throw Error("linear part is singular");
  }
  AffineMap inv;
  for (std::uint8_t x = 0; x < 16; ++x) {
    const auto y = linear(x);
    for (std::size_t k = 0; k < 4; ++k) {
      if (y == (1U << k)) {
        inv.columns[k] = x;
      }
    }
  }
  inv.translation = 0;
  return inv;
}

std::optional<AffineMap> as_affine(const CellPerm& g) noexcept {
  // Cell index and GF(2)^4 coordinate coincide.
  AffineMap m;
  m.translation = static_cast<std::uint8_t>(g(0));
  for (std::size_t k = 0; k < 4; ++k) {
    m.columns[k] = static_cast<std::uint8_t>(g(1 << k) ^ m.translation);
  }
  for (std::uint8_t x = 0; x < 16; ++x) {
    if (m(x) != g(x)) {
      return std::nullopt;
    }
  }
  return m;
}

std::uint64_t affine_group_order(int n) {
  if (n < 1) {
    throw Error("affine group dimension must be at least 1");
  }
  if (n > 7) {
    throw Error("|AGL(" + std::to_string(n) + ",2)| does not fit in 64 bits");
  }
  const std::uint64_t q = std::uint64_t{1} << n;
  std::uint64_t order = q;
  for (int i = 0; i < n; ++i) {
    order *= q - (std::uint64_t{1} << i);
  }
  return order;
}

}  // namespace diamondlab
