#pragma once

// Permutations of arbitrary (small) degree and a base-and-strong-generating
// set built with the deterministic Schreier-Sims algorithm.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace diamondlab {

class Perm {
 public:
  Perm() = default;
  /// Throws Error unless `images` is a bijection of {0..n-1}, n <= 256.
  explicit Perm(std::vector<std::uint8_t> images);
  [[nodiscard]] static Perm from_images(std::span<const int> images);
  [[nodiscard]] static Perm identity(std::size_t degree);

  [[nodiscard]] std::size_t degree() const noexcept { return images_.size(); }
  [[nodiscard]] std::uint8_t operator()(std::size_t point) const noexcept { return images_[point]; }
  [[nodiscard]] const std::vector<std::uint8_t>& images() const noexcept { return images_; }

  [[nodiscard]] Perm inverse() const;
  [[nodiscard]] bool is_identity() const noexcept;
  /// Image of a point set given as a bit mask (degree <= 32).
  [[nodiscard]] std::uint32_t apply_to_mask(std::uint32_t mask) const noexcept;
  [[nodiscard]] std::string to_string() const;

  /// (a * b)(x) = a(b(x)).
  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

class StabilizerChain {
 public:
  /// Builds a BSGS for <gens>. The base starts with `base_prefix` and is
  /// extended with the smallest point moved by a new strong generator.
  [[nodiscard]] static StabilizerChain build(std::span<const Perm> gens, std::size_t degree,
                                             std::span<const std::uint8_t> base_prefix = {});

  [[nodiscard]] std::size_t degree() const noexcept { return degree_; }
  [[nodiscard]] std::vector<std::uint8_t> base() const;
  [[nodiscard]] std::uint64_t order() const noexcept;
  [[nodiscard]] bool contains(const Perm& g) const;
  /// Orbit sizes of the successive point stabilizers.
  [[nodiscard]] std::vector<std::size_t> transversal_sizes() const;
  [[nodiscard]] std::vector<Perm> strong_generators() const;

  /// Chain for the stabilizer of `point`.
  [[nodiscard]] StabilizerChain point_stabilizer(std::uint8_t point) const;

  /// Same group, rebuilt with the given base prefix.
  [[nodiscard]] StabilizerChain with_base_prefix(std::span<const std::uint8_t> prefix) const;

  /// Visits each element once in transversal order. Subtrees are cut when
  /// `prune(level, image)` returns true, where image is the image of the
  /// level's base point under the element being built.
  void enumerate(const std::function<bool(std::size_t level, std::uint8_t image)>& prune,
                 const std::function<void(const Perm&)>& visit) const;

  /// Uniform random element from a 64-bit seed stream (deterministic).
  [[nodiscard]] Perm random_element(std::uint64_t& state) const;

 private:
  struct Level {
    std::uint8_t point = 0;
    std::vector<Perm> gens;
    std::vector<std::uint8_t> orbit;
    std::vector<int> rep_index;  // per point: index into reps, -1 if outside the orbit
    std::vector<Perm> reps;      // reps[k] maps `point` to orbit[k]
    std::vector<Perm> inv_reps;
  };

  void recompute(Level& level) const;
  /// Strips g through levels [from, end). Returns the residue and the level
  /// where sifting stopped (levels_.size() if it passed every level).
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from) const;
  void append_level_for(const Perm& g);

  std::size_t degree_ = 0;
  std::vector<Level> levels_;
};

}  // namespace diamondlab
