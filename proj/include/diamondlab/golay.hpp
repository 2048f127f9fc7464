#pragma once

// The binary Golay code on the 4x6 MOG array, its octads, M24 and the
// bridge from the octad stabilizer back to the 4x4 tile square.
//
// Point labeling: point 6*row + col. The brick is columns 0-1; the square is
// columns 2-5 and square point (row, col) is tile cell (row, col - 2).

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "diamondlab/geometry.hpp"
#include "diamondlab/perm_group.hpp"
#include "diamondlab/schreier_sims.hpp"

namespace diamondlab {

namespace mog {

inline constexpr int kPoints = 24;

[[nodiscard]] constexpr int point(int row, int col) noexcept { return 6 * row + col; }
[[nodiscard]] constexpr int square_point(int cell) noexcept { return 6 * (cell / 4) + 2 + cell % 4; }
[[nodiscard]] constexpr std::optional<int> point_to_cell(int p) noexcept {
  const int col = p % 6;
  if (col < 2) {
    return std::nullopt;
  }
  return 4 * (p / 6) + (col - 2);
}

[[nodiscard]] constexpr std::uint32_t brick_mask() noexcept {
  std::uint32_t m = 0;
  for (int r = 0; r < 4; ++r) {
    m |= (1U << point(r, 0)) | (1U << point(r, 1));
  }
  return m;
}
[[nodiscard]] constexpr std::uint32_t square_mask() noexcept { return ((1U << kPoints) - 1) & ~brick_mask(); }

/// Square part of a 24-point word as a cell mask.
[[nodiscard]] std::uint16_t square_cells(std::uint32_t word) noexcept;

}  // namespace mog

/// Embedded data files (see data/).
[[nodiscard]] std::string_view embedded_golay_matrix() noexcept;
[[nodiscard]] std::string_view embedded_m24_generators() noexcept;

/// Rows of 24 '0'/'1' characters, point 0 first. '#' starts a comment.
[[nodiscard]] std::vector<std::uint32_t> parse_generator_matrix(std::string_view text);

/// Lines of 24 whitespace-separated images. '#' starts a comment.
[[nodiscard]] std::vector<Perm> parse_m24_generators(std::string_view text);

struct GolayCode {
  std::vector<std::uint32_t> rows;
  std::vector<std::uint32_t> codewords;  ///< all 4096, ascending
  std::map<int, std::size_t> weight_distribution;

  [[nodiscard]] bool contains(std::uint32_t word) const noexcept;
};

/// Spans the rows and validates: 12 independent rows, pairwise orthogonal,
/// weights (1, 759, 2576, 759, 1) over {0, 8, 12, 16, 24}, the brick is a
/// codeword, and the brick-disjoint octads are the 30 affine hyperplanes of
/// the square. Throws VerificationError listing each failed validation.
[[nodiscard]] GolayCode build_golay(std::string_view matrix_text = embedded_golay_matrix());

/// Weight-8 codewords, ascending.
[[nodiscard]] std::vector<std::uint32_t> enumerate_octads(const GolayCode& code);

struct SteinerReport {
  std::size_t five_sets = 0;
  std::map<std::size_t, std::size_t> coverage_histogram;  ///< multiplicity -> number of 5-sets
};

/// Counts, for every 5-subset of the 24 points, the octads containing it.
/// Throws VerificationError with witness 5-sets covered 0 or >= 2 times.
[[nodiscard]] SteinerReport verify_steiner(std::span<const std::uint32_t> octads);

/// |X & set| -> number of octads X.
[[nodiscard]] std::map<int, std::size_t> intersection_profile(std::span<const std::uint32_t> octads,
                                                              std::uint32_t set);

/// Checks every generator permutes the octads, builds the chain and checks
/// its order is 759 * 322560. Throws VerificationError otherwise.
[[nodiscard]] StabilizerChain m24_group(std::span<const Perm> gens, std::span<const std::uint32_t> octads);

inline constexpr std::uint64_t kM24Order = 244'823'040;

struct OctadStabilizer {
  StabilizerChain chain;
  std::vector<Perm> elements;
};

/// Setwise stabilizer of `octad`: the chain is rebuilt with the octad's
/// points as base prefix and searched for elements sending those base
/// points into the octad.
[[nodiscard]] OctadStabilizer octad_stabilizer(const StabilizerChain& group, std::uint32_t octad);

/// Restriction of a brick-stabilizing permutation to the square. Throws
/// Error if it does not preserve the square.
[[nodiscard]] CellPerm restrict_to_square(const Perm& g);

struct RestrictionReport {
  std::size_t stabilizer_size = 0;
  std::size_t restricted_size = 0;
  std::size_t kernel_size = 0;
  bool faithful = false;
  bool equals_group = false;
};

/// Restricts every element and compares the resulting set with `g`.
/// Throws VerificationError when unfaithful or different.
[[nodiscard]] RestrictionReport restrict_to_square(std::span<const Perm> elements, const GroupSet& g);

struct SplitRecord {
  std::uint32_t half = 0;   ///< the half holding the lowest brick point
  std::uint32_t other = 0;
  FourPartition partition{};
  ProjLine line;
};

/// For each 4|4 split {h, B\h} of the brick, the square parts of the octads
/// meeting the brick in h. Checks they partition the square into four
/// 4-sets, agree for h and B\h, and match exactly one line's four_partition;
/// the 35 splits must hit all 35 lines. Throws VerificationError otherwise.
[[nodiscard]] std::vector<SplitRecord> brick_split_correspondence(std::span<const std::uint32_t> octads);

/// Square cell masks of the octads missing the brick, ascending.
[[nodiscard]] std::vector<std::uint16_t> brick_disjoint_square_sets(std::span<const std::uint32_t> octads);

}  // namespace diamondlab
