#pragma once

// The GF(4)-valued pattern algebra: cellwise sums, the affine patterns that
// the orbit of D generates additively, and the "uninterrupted cuts" census.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diamondlab/pattern.hpp"
#include "diamondlab/perm_group.hpp"

namespace diamondlab {

class Gf4Pattern {
 public:
  constexpr Gf4Pattern() = default;
  [[nodiscard]] static Gf4Pattern from_pattern(const Pattern& p) noexcept;
  [[nodiscard]] Pattern to_pattern() const noexcept;

  /// Same packing as Pattern::key(): GF(4) bits equal the codec digit.
  [[nodiscard]] static Gf4Pattern from_key(std::uint32_t key) noexcept;
  [[nodiscard]] std::uint32_t key() const noexcept;

  [[nodiscard]] Gf4 at(int cell) const noexcept { return values_[static_cast<std::size_t>(cell)]; }
  void set(int cell, Gf4 v) noexcept { values_[static_cast<std::size_t>(cell)] = v; }

  [[nodiscard]] static Gf4Pattern constant(Gf4 v) noexcept;

  friend Gf4Pattern operator+(const Gf4Pattern& a, const Gf4Pattern& b) noexcept;
  friend bool operator==(const Gf4Pattern&, const Gf4Pattern&) = default;

 private:
  std::array<Gf4, kCells> values_{};
};

[[nodiscard]] inline Gf4Pattern pattern_add(const Gf4Pattern& a, const Gf4Pattern& b) noexcept { return a + b; }

/// Both bit components (s and d) are affine functions of the cell
/// coordinate; constant components allowed.
[[nodiscard]] bool is_affine_pattern(const Gf4Pattern& p) noexcept;

/// All 1024 affine patterns, enumerated from their (linear, constant)
/// parameters, sorted by key.
[[nodiscard]] std::vector<Gf4Pattern> affine_patterns();

/// Subgroup of (patterns, +) generated by `seeds`, sorted by key. Throws
/// CapExceeded past `cap` elements.
[[nodiscard]] std::vector<Gf4Pattern> additive_closure(std::span<const Gf4Pattern> seeds,
                                                       std::size_t cap = kDefaultClosureCap);

enum class CutDefinition : std::uint8_t { ConstantRelation, AllContrast, AllMatch };
inline constexpr std::array<CutDefinition, 3> kCutDefinitions{CutDefinition::ConstantRelation,
                                                              CutDefinition::AllContrast, CutDefinition::AllMatch};

[[nodiscard]] std::string_view cut_definition_name(CutDefinition def) noexcept;
/// Throws Error for unknown names.
[[nodiscard]] CutDefinition parse_cut_definition(std::string_view name);

/// Across each of the 3 internal horizontal and 3 internal vertical grid
/// lines, a position carries relation bit 1 when the two touching edge
/// colors differ.
[[nodiscard]] bool cuts_uninterrupted(const Gf4Pattern& p, CutDefinition def) noexcept;

/// Affine equations over GF(2) in up to 63 unknowns.
class Gf2System {
 public:
  explicit Gf2System(int unknowns);

  void add(std::uint64_t coefficients, bool rhs);
  [[nodiscard]] int unknowns() const noexcept { return unknowns_; }
  [[nodiscard]] int rank() const;
  [[nodiscard]] bool consistent() const;
  /// 2^(unknowns - rank) when consistent, otherwise 0.
  [[nodiscard]] std::uint64_t solution_count() const;

 private:
  struct Reduced {
    int rank = 0;
    bool consistent = true;
  };
  [[nodiscard]] Reduced reduce() const;

  int unknowns_;
  std::vector<std::uint64_t> rows_;  // rhs stored in bit 63
};

struct CutCensus {
  CutDefinition definition = CutDefinition::ConstantRelation;
  std::uint64_t count = 0;
  bool equals_affine_set = false;
  /// Slice check: patterns with every d bit zero, counted by scanning all
  /// 2^16 of them and by rank.
  std::uint64_t slice_scan = 0;
  std::uint64_t slice_rank = 0;
};

/// Exact count by rank of the constraint system over the 32 component
/// bits (s of cell i is unknown i, d is unknown 16 + i). Throws
/// VerificationError when the slice scan disagrees with the rank count.
[[nodiscard]] CutCensus cut_census(CutDefinition def);

}  // namespace diamondlab
