#include "diamondlab/schreier_sims.hpp"

#include <algorithm>
#include <random>

#include "diamondlab/error.hpp"

namespace diamondlab {

Perm::Perm(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  if (images_.size() > 256) {
    throw Error("permutation degree exceeds 256");
  }
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const auto v = images_[i];
    if (v >= images_.size() || seen[v]) {
      throw Error("not a bijection at position " + std::to_string(i));
    }
    seen[v] = true;
  }
}

Perm Perm::from_images(std::span<const int> images) {
  std::vector<std::uint8_t> v;
  v.reserve(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] < 0 || images[i] > 255) {
      throw Error("not a bijection at position " + std::to_string(i));
    }
    v.push_back(static_cast<std::uint8_t>(images[i]));
  }
  return Perm(std::move(v));
}

Perm Perm::identity(std::size_t degree) {
  std::vector<std::uint8_t> v(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    v[i] = static_cast<std::uint8_t>(i);
  }
  return Perm(std::move(v));
}

Perm Perm::inverse() const {
  Perm inv = *this;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv.images_[images_[i]] = static_cast<std::uint8_t>(i);
  }
  return inv;
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) {
      return false;
    }
  }
  return true;
}

std::uint32_t Perm::apply_to_mask(std::uint32_t mask) const noexcept {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if ((mask >> i) & 1U) {
      out |= 1U << images_[i];
    }
  }
  return out;
}

std::string Perm::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i != 0) {
      out += ' ';
    }
    out += std::to_string(images_[i]);
  }
  return out;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) {
    throw Error("degree mismatch in permutation product");
  }
  Perm c = b;
  for (std::size_t i = 0; i < b.images_.size(); ++i) {
    c.images_[i] = a.images_[b.images_[i]];
  }
  return c;
}

void StabilizerChain::recompute(Level& level) const {
  level.orbit.assign(1, level.point);
  level.rep_index.assign(degree_, -1);
  level.reps.assign(1, Perm::identity(degree_));
  level.rep_index[level.point] = 0;
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    const auto pt = level.orbit[k];
    for (const auto& s : level.gens) {
      const auto q = s(pt);
      if (level.rep_index[q] < 0) {
        level.rep_index[q] = static_cast<int>(level.orbit.size());
        level.orbit.push_back(q);
        level.reps.push_back(s * level.reps[k]);
      }
    }
  }
  level.inv_reps.clear();
  level.inv_reps.reserve(level.reps.size());
  for (const auto& r : level.reps) {
    level.inv_reps.push_back(r.inverse());
  }
}

std::pair<Perm, std::size_t> StabilizerChain::sift(Perm g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const auto& level = levels_[l];
    const int idx = level.rep_index[g(level.point)];
    if (idx < 0) {
      return {std::move(g), l};
    }
    g = level.inv_reps[static_cast<std::size_t>(idx)] * g;
  }
  return {std::move(g), levels_.size()};
}

void StabilizerChain::append_level_for(const Perm& g) {
  std::vector<bool> used(degree_, false);
  for (const auto& level : levels_) {
    used[level.point] = true;
  }
  for (std::size_t p = 0; p < degree_; ++p) {
    if (!used[p] && g(p) != p) {
      levels_.push_back(Level{static_cast<std::uint8_t>(p), {}, {}, {}, {}, {}});
      return;
    }
  }
  throw Error("internal: residue fixes every point but is not the identity");
}

StabilizerChain StabilizerChain::build(std::span<const Perm> gens, std::size_t degree,
                                       std::span<const std::uint8_t> base_prefix) {
  StabilizerChain chain;
  chain.degree_ = degree;
  for (const auto& g : gens) {
    if (g.degree() != degree) {
      throw Error("generator degree " + std::to_string(g.degree()) + " does not match " + std::to_string(degree));
    }
  }
  for (const auto b : base_prefix) {
    if (b >= degree) {
      throw Error("base point out of range");
    }
    chain.levels_.push_back(Level{b, {}, {}, {}, {}, {}});
  }

  // Strong generators start as the non-identity inputs; each lands on every
  // level whose earlier base points it fixes.
  for (const auto& g : gens) {
    if (g.is_identity()) {
      continue;
    }
    bool moves_base = false;
    for (const auto& level : chain.levels_) {
      if (g(level.point) != level.point) {
        moves_base = true;
        break;
      }
    }
    if (!moves_base) {
      chain.append_level_for(g);
    }
    for (auto& level : chain.levels_) {
      level.gens.push_back(g);
      if (g(level.point) != level.point) {
        break;
      }
    }
  }
  for (auto& level : chain.levels_) {
    chain.recompute(level);
  }

  // Classic Schreier-Sims: check every Schreier generator of level i sifts
  // through levels i+1.., adding residues as new strong generators.
  std::size_t i = chain.levels_.size();
  while (i > 0) {
    const std::size_t cur = i - 1;
    bool restarted = false;
    for (std::size_t k = 0; k < chain.levels_[cur].orbit.size() && !restarted; ++k) {
      const std::size_t ngens = chain.levels_[cur].gens.size();
      for (std::size_t gi = 0; gi < ngens; ++gi) {
        const auto& level = chain.levels_[cur];
        const auto& s = level.gens[gi];
        const auto pt = level.orbit[k];
        const auto& u_pt = level.reps[k];
        const auto& u_img_inv = level.inv_reps[static_cast<std::size_t>(level.rep_index[s(pt)])];
        Perm schreier = u_img_inv * (s * u_pt);
        if (schreier.is_identity()) {
          continue;
        }
        auto [residue, stop] = chain.sift(std::move(schreier), cur + 1);
        if (stop == chain.levels_.size() && residue.is_identity()) {
          continue;
        }
        if (stop == chain.levels_.size()) {
          chain.append_level_for(residue);
        }
        for (std::size_t l = cur + 1; l <= stop; ++l) {
          chain.levels_[l].gens.push_back(residue);
          chain.recompute(chain.levels_[l]);
        }
        i = stop + 1;
        restarted = true;
        break;
      }
    }
    if (!restarted) {
      --i;
    }
  }
  return chain;
}

std::vector<std::uint8_t> StabilizerChain::base() const {
  std::vector<std::uint8_t> out;
  for (const auto& level : levels_) {
    out.push_back(level.point);
  }
  return out;
}

std::uint64_t StabilizerChain::order() const noexcept {
  std::uint64_t n = 1;
  for (const auto& level : levels_) {
    n *= level.orbit.size();
  }
  return n;
}

bool StabilizerChain::contains(const Perm& g) const {
  if (g.degree() != degree_) {
    return false;
  }
  auto [residue, stop] = sift(g, 0);
  return stop == levels_.size() && residue.is_identity();
}

std::vector<std::size_t> StabilizerChain::transversal_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& level : levels_) {
    out.push_back(level.orbit.size());
  }
  return out;
}

std::vector<Perm> StabilizerChain::strong_generators() const {
  std::vector<Perm> out;
  for (const auto& level : levels_) {
    for (const auto& g : level.gens) {
      if (std::find(out.begin(), out.end(), g) == out.end()) {
        out.push_back(g);
      }
    }
  }
  return out;
}

StabilizerChain StabilizerChain::with_base_prefix(std::span<const std::uint8_t> prefix) const {
  const auto gens = strong_generators();
  return build(gens, degree_, prefix);
}

StabilizerChain StabilizerChain::point_stabilizer(std::uint8_t point) const {
  const std::uint8_t prefix[] = {point};
  StabilizerChain full = with_base_prefix(prefix);
  StabilizerChain sub;
  sub.degree_ = degree_;
  sub.levels_.assign(full.levels_.begin() + 1, full.levels_.end());
  return sub;
}

void StabilizerChain::enumerate(const std::function<bool(std::size_t, std::uint8_t)>& prune,
                                const std::function<void(const Perm&)>& visit) const {
  // An element is u_0 u_1 ... u_{k-1}; with prefix P = u_0 ... u_{l-1} the
  // base point of level l goes to P(orbit point of u_l).
  std::function<void(std::size_t, const Perm&)> descend = [&](std::size_t l, const Perm& prefix) {
    if (l == levels_.size()) {
      visit(prefix);
      return;
    }
    const auto& level = levels_[l];
    for (std::size_t k = 0; k < level.orbit.size(); ++k) {
      if (prune(l, prefix(level.orbit[k]))) {
        continue;
      }
      descend(l + 1, prefix * level.reps[k]);
    }
  };
  descend(0, Perm::identity(degree_));
}

Perm StabilizerChain::random_element(std::uint64_t& state) const {
  std::mt19937_64 rng(state);
  Perm g = Perm::identity(degree_);
  for (const auto& level : levels_) {
    std::uniform_int_distribution<std::size_t> pick(0, level.orbit.size() - 1);
    g = g * level.reps[pick(rng)];
  }
  state = rng();
  return g;
}

}  // namespace diamondlab
