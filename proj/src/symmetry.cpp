#include "diamondlab/symmetry.hpp"

#include "diamondlab/error.hpp"

namespace diamondlab {

namespace {

constexpr std::array<const char*, 8> kIsoNames{"id", "r90", "r180", "r270", "f", "r90f", "r180f", "r270f"};

// A clockwise quarter-turn carries left->top, top->right, right->bottom,
// bottom->left, so s' = old right = s+d+1 and the diagonal switches.
constexpr TileType rotate_tile(TileType t) noexcept {
  return TileType{static_cast<std::uint8_t>(t.d ^ 1U), static_cast<std::uint8_t>(t.s ^ t.d ^ 1U)};
}

// The mirror swaps left and right only.
constexpr TileType mirror_tile(TileType t) noexcept {
  return TileType{static_cast<std::uint8_t>(t.d ^ 1U), t.s};
}

bool matches_on(const Pattern& a, const Pattern& b, std::span<const int> cells) noexcept {
  for (const int c : cells) {
    if (a.at(c) != b.at(c)) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::string SquareIsometry::name() const { return kIsoNames[static_cast<std::size_t>(index())]; }

CellCoord SquareIsometry::map_cell(CellCoord c) const noexcept {
  for (int k = 0; k < rot; ++k) {
    c = CellCoord{c.col, 3 - c.row};
  }
  if (flip) {
    c.col = 3 - c.col;
  }
  return c;
}

TileType SquareIsometry::map_tile(TileType t) const noexcept {
  for (int k = 0; k < rot; ++k) {
    t = rotate_tile(t);
  }
  return flip ? mirror_tile(t) : t;
}

std::array<SquareIsometry, 8> all_isometries() noexcept {
  std::array<SquareIsometry, 8> out{};
  for (int i = 0; i < 8; ++i) {
    out[static_cast<std::size_t>(i)] = SquareIsometry::from_index(i);
  }
  return out;
}

SquareIsometry operator*(SquareIsometry a, SquareIsometry b) noexcept {
  // Identify the composite by its action on an asymmetric pair of cells.
  const CellCoord p0{0, 1};
  const CellCoord p1{0, 2};
  const auto t0 = a.map_cell(b.map_cell(p0));
  const auto t1 = a.map_cell(b.map_cell(p1));
  for (const auto c : all_isometries()) {
    if (c.map_cell(p0) == t0 && c.map_cell(p1) == t1) {
      return c;
    }
  }
  return SquareIsometry{};
}

Pattern apply_isometry(SquareIsometry iso, const Pattern& p) noexcept {
  Pattern out;
  for (int cell = 0; cell < kCells; ++cell) {
    out.set(iso.map_cell(CellCoord::from_index(cell)).index(), iso.map_tile(p.at(cell)));
  }
  return out;
}

std::string SymmetryProfile::shape() const {
  auto list = [](std::uint8_t mask) {
    std::string s;
    for (int i = 0; i < 8; ++i) {
      if ((mask >> i) & 1U) {
        if (!s.empty()) {
          s += ',';
        }
        s += kIsoNames[static_cast<std::size_t>(i)];
      }
    }
    return s;
  };
  return "O{" + list(ordinary) + "}|X{" + list(interchange) + "}";
}

SymmetryProfile symmetry_profile(const Pattern& p) noexcept {
  SymmetryProfile profile;
  const Pattern swapped = color_interchange(p);
  for (const auto iso : all_isometries()) {
    const Pattern image = apply_isometry(iso, p);
    const auto bit = static_cast<std::uint8_t>(1U << iso.index());
    if (!iso.is_identity() && image == p) {
      profile.ordinary |= bit;
    }
    if (image == swapped) {
      profile.interchange |= bit;
    }
  }
  return profile;
}

TheoremReport verify_theorem(std::span<const Pattern> patterns) {
  TheoremReport report;
  report.total = patterns.size();
  for (const auto& p : patterns) {
    const auto profile = symmetry_profile(p);
    if (profile.ordinary != 0) {
      ++report.ordinary_count;
    } else if (profile.interchange != 0) {
      ++report.interchange_only_count;
    } else {
      report.failures.push_back(p.encode());
    }
    ++report.census[profile.shape()];
    for (const auto iso : all_isometries()) {
      if ((profile.interchange >> iso.index()) & 1U) {
        ++report.interchange_isometries[iso.name()];
      }
    }
  }
  if (!report.failures.empty()) {
    throw VerificationError(std::to_string(report.failures.size()) + " pattern(s) have no ordinary or color-interchange symmetry",
                            report.failures);
  }
  return report;
}

bool center_lemma_check(const Pattern& p) noexcept {
  const Pattern swapped = color_interchange(p);
  for (const auto iso : all_isometries()) {
    const Pattern image = apply_isometry(iso, p);
    if (!iso.is_identity() && matches_on(image, p, kCenterCells) && image == p) {
      return true;
    }
    if (matches_on(image, swapped, kCenterCells) && image == swapped) {
      return true;
    }
  }
  return false;
}

}  // namespace diamondlab
