#include "diamondlab/diamond_ring.hpp"

#include <algorithm>
#include <unordered_set>

#include "diamondlab/error.hpp"
#include "diamondlab/geometry.hpp"

namespace diamondlab {

namespace {

// An edge color as an affine function of the tile bits: c + a_s*s + a_d*d.
struct EdgeForm {
  std::uint8_t constant = 0;
  std::uint8_t s = 0;
  std::uint8_t d = 0;
};

enum class Edge { Top, Bottom, Left, Right };

std::uint8_t edge_color(TileType t, Edge e) {
  const auto c = tile_edge_colors(t);
  switch (e) {
    case Edge::Top:
      return c.top;
    case Edge::Bottom:
      return c.bottom;
    case Edge::Left:
      return c.left;
    case Edge::Right:
      return c.right;
  }
  return 0;
}

EdgeForm edge_form(Edge e) {
  const auto base = edge_color(TileType{0, 0}, e);
  return EdgeForm{base, static_cast<std::uint8_t>(edge_color(TileType{0, 1}, e) ^ base),
                  static_cast<std::uint8_t>(edge_color(TileType{1, 0}, e) ^ base)};
}

struct Relation {
  std::uint64_t coefficients = 0;
  bool constant = false;
};

void accumulate(Relation& rel, int cell, const EdgeForm& f) {
  if (f.s != 0) {
    rel.coefficients ^= std::uint64_t{1} << cell;
  }
  if (f.d != 0) {
    rel.coefficients ^= std::uint64_t{1} << (16 + cell);
  }
  rel.constant ^= f.constant != 0;
}

// relations[line][position]; lines 0..2 horizontal (below row r), 3..5
// vertical (right of column c).
std::array<std::array<Relation, 4>, 6> relation_forms() {
  std::array<std::array<Relation, 4>, 6> out{};
  const auto top = edge_form(Edge::Top);
  const auto bottom = edge_form(Edge::Bottom);
  const auto left = edge_form(Edge::Left);
  const auto right = edge_form(Edge::Right);
  for (int line = 0; line < 3; ++line) {
    for (int pos = 0; pos < 4; ++pos) {
      auto& h = out[static_cast<std::size_t>(line)][static_cast<std::size_t>(pos)];
      accumulate(h, CellCoord{line, pos}.index(), bottom);
      accumulate(h, CellCoord{line + 1, pos}.index(), top);
      auto& v = out[static_cast<std::size_t>(3 + line)][static_cast<std::size_t>(pos)];
      accumulate(v, CellCoord{pos, line}.index(), right);
      accumulate(v, CellCoord{pos, line + 1}.index(), left);
    }
  }
  return out;
}

// Relation bits read straight from tile edge colors.
std::array<std::array<std::uint8_t, 4>, 6> relation_bits(const Gf4Pattern& p) {
  std::array<std::array<std::uint8_t, 4>, 6> out{};
  auto colors = [&](int r, int c) { return tile_edge_colors(gf4_to_tile(p.at(CellCoord{r, c}.index()))); };
  for (std::size_t line = 0; line < 3; ++line) {
    const int l = static_cast<int>(line);
    for (std::size_t pos = 0; pos < 4; ++pos) {
      const int q = static_cast<int>(pos);
      out[line][pos] = static_cast<std::uint8_t>(colors(l, q).bottom ^ colors(l + 1, q).top);
      out[3 + line][pos] = static_cast<std::uint8_t>(colors(q, l).right ^ colors(q, l + 1).left);
    }
  }
  return out;
}

std::uint64_t rank_count(CutDefinition def, const std::vector<std::pair<std::uint64_t, bool>>& extra) {
  const auto forms = relation_forms();
  auto system_for = [&](auto rhs_for_line) {
    Gf2System sys(32);
    for (std::size_t line = 0; line < forms.size(); ++line) {
      for (const auto& rel : forms[line]) {
        sys.add(rel.coefficients, rhs_for_line(line) != rel.constant);
      }
    }
    for (const auto& [coeffs, rhs] : extra) {
      sys.add(coeffs, rhs);
    }
    return sys;
  };
  switch (def) {
    case CutDefinition::AllContrast:
      return system_for([](std::size_t) { return true; }).solution_count();
    case CutDefinition::AllMatch:
      return system_for([](std::size_t) { return false; }).solution_count();
    case CutDefinition::ConstantRelation: {
      // Sum over the 2^6 choices of one relation constant per line.
      std::uint64_t total = 0;
      for (unsigned k = 0; k < 64; ++k) {
        total += system_for([k](std::size_t line) { return ((k >> line) & 1U) != 0; }).solution_count();
      }
      return total;
    }
  }
  return 0;
}

}  // namespace

Gf4Pattern Gf4Pattern::from_pattern(const Pattern& p) noexcept {
  Gf4Pattern out;
  for (int i = 0; i < kCells; ++i) {
    out.set(i, tile_to_gf4(p.at(i)));
  }
  return out;
}

Pattern Gf4Pattern::to_pattern() const noexcept {
  Pattern out;
  for (int i = 0; i < kCells; ++i) {
    out.set(i, gf4_to_tile(at(i)));
  }
  return out;
}

Gf4Pattern Gf4Pattern::from_key(std::uint32_t key) noexcept { return from_pattern(Pattern::from_key(key)); }

std::uint32_t Gf4Pattern::key() const noexcept { return to_pattern().key(); }

Gf4Pattern Gf4Pattern::constant(Gf4 v) noexcept {
  Gf4Pattern out;
  out.values_.fill(v);
  return out;
}

Gf4Pattern operator+(const Gf4Pattern& a, const Gf4Pattern& b) noexcept {
  Gf4Pattern out;
  for (std::size_t i = 0; i < kCells; ++i) {
    out.values_[i] = a.values_[i] + b.values_[i];
  }
  return out;
}

bool is_affine_pattern(const Gf4Pattern& p) noexcept {
  const auto pattern = p.to_pattern();
  return fit_affine_form(component_map(pattern, Component::S)).has_value() &&
         fit_affine_form(component_map(pattern, Component::D)).has_value();
}

std::vector<Gf4Pattern> affine_patterns() {
  std::vector<std::uint32_t> keys;
  for (unsigned s_params = 0; s_params < 32; ++s_params) {
    for (unsigned d_params = 0; d_params < 32; ++d_params) {
      Gf4Pattern p;
      for (std::uint8_t x = 0; x < 16; ++x) {
        const auto s = static_cast<std::uint8_t>(dot(s_params & 0xFU, x) ^ (s_params >> 4));
        const auto d = static_cast<std::uint8_t>(dot(d_params & 0xFU, x) ^ (d_params >> 4));
        p.set(x, Gf4::from_bits(static_cast<std::uint8_t>(s | (d << 1))));
      }
      keys.push_back(p.key());
    }
  }
  std::sort(keys.begin(), keys.end());
  std::vector<Gf4Pattern> out;
  out.reserve(keys.size());
  for (const auto k : keys) {
    out.push_back(Gf4Pattern::from_key(k));
  }
  return out;
}

std::vector<Gf4Pattern> additive_closure(std::span<const Gf4Pattern> seeds, std::size_t cap) {
  // Keys add by XOR, so the span grows by doubling whenever a seed is new.
  std::vector<std::uint32_t> members{0};
  std::unordered_set<std::uint32_t> index{0};
  for (const auto& seed : seeds) {
    const auto k = seed.key();
    if (index.contains(k)) {
      continue;
    }
    const std::size_t n = members.size();
    if (2 * n > cap) {
      throw CapExceeded("additive closure exceeded cap of " + std::to_string(cap) + " elements");
    }
    for (std::size_t i = 0; i < n; ++i) {
      const auto sum = members[i] ^ k;
      members.push_back(sum);
      index.insert(sum);
    }
  }
  std::sort(members.begin(), members.end());
  std::vector<Gf4Pattern> out;
  out.reserve(members.size());
  for (const auto k : members) {
    out.push_back(Gf4Pattern::from_key(k));
  }
  return out;
}

std::string_view cut_definition_name(CutDefinition def) noexcept {
  switch (def) {
    case CutDefinition::ConstantRelation:
      return "ConstantRelation";
    case CutDefinition::AllContrast:
      return "AllContrast";
    case CutDefinition::AllMatch:
      return "AllMatch";
  }
  return "?";
}

CutDefinition parse_cut_definition(std::string_view name) {
  for (const auto def : kCutDefinitions) {
    if (cut_definition_name(def) == name) {
      return def;
    }
  }
  throw Error("unknown cut definition '" + std::string(name) +
              "' (expected ConstantRelation, AllContrast or AllMatch)");
}

bool cuts_uninterrupted(const Gf4Pattern& p, CutDefinition def) noexcept {
  const auto bits = relation_bits(p);
  for (const auto& line : bits) {
    for (const auto b : line) {
      switch (def) {
        case CutDefinition::ConstantRelation:
          if (b != line[0]) {
            return false;
          }
          break;
        case CutDefinition::AllContrast:
          if (b != 1) {
            return false;
          }
          break;
        case CutDefinition::AllMatch:
          if (b != 0) {
            return false;
          }
          break;
      }
    }
  }
  return true;
}

Gf2System::Gf2System(int unknowns) : unknowns_(unknowns) {
  if (unknowns < 0 || unknowns > 63) {
    throw Error("Gf2System supports at most 63 unknowns");
  }
}

void Gf2System::add(std::uint64_t coefficients, bool rhs) {
  const std::uint64_t mask = unknowns_ == 0 ? 0 : (~std::uint64_t{0} >> (64 - unknowns_));
  rows_.push_back((coefficients & mask) | (rhs ? std::uint64_t{1} << 63 : 0));
}

Gf2System::Reduced Gf2System::reduce() const {
  auto rows = rows_;
  Reduced r;
  std::size_t pivot_row = 0;
  for (int col = 0; col < unknowns_; ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(pivot_row), rows.end(),
                           [bit](std::uint64_t row) { return (row & bit) != 0; });
    if (it == rows.end()) {
      continue;
    }
    std::swap(*it, rows[pivot_row]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != pivot_row && (rows[i] & bit) != 0) {
        rows[i] ^= rows[pivot_row];
      }
    }
    ++pivot_row;
  }
  r.rank = static_cast<int>(pivot_row);
  for (std::size_t i = pivot_row; i < rows.size(); ++i) {
    if (rows[i] != 0) {  // 0 = 1
      r.consistent = false;
    }
  }
  return r;
}

int Gf2System::rank() const { return reduce().rank; }

bool Gf2System::consistent() const { return reduce().consistent; }

std::uint64_t Gf2System::solution_count() const {
  const auto r = reduce();
  return r.consistent ? std::uint64_t{1} << (unknowns_ - r.rank) : 0;
}

CutCensus cut_census(CutDefinition def) {
  CutCensus census;
  census.definition = def;
  census.count = rank_count(def, {});

  if (census.count == 1024) {
    const auto affine = affine_patterns();
    census.equals_affine_set =
        std::all_of(affine.begin(), affine.end(), [def](const Gf4Pattern& p) { return cuts_uninterrupted(p, def); });
  }

  std::vector<std::pair<std::uint64_t, bool>> d_zero;
  for (int i = 0; i < kCells; ++i) {
    d_zero.emplace_back(std::uint64_t{1} << (16 + i), false);
  }
  census.slice_rank = rank_count(def, d_zero);
  for (std::uint32_t s_bits = 0; s_bits < (1U << 16); ++s_bits) {
    Gf4Pattern p;
    for (int i = 0; i < kCells; ++i) {
      p.set(i, Gf4::from_bits(static_cast<std::uint8_t>((s_bits >> i) & 1U)));
    }
    census.slice_scan += cuts_uninterrupted(p, def) ? 1 : 0;
  }
  if (census.slice_scan != census.slice_rank) {
    throw VerificationError("cut census for " + std::string(cut_definition_name(def)) +
                                ": slice scan disagrees with rank count",
                            {std::to_string(census.slice_scan) + " != " + std::to_string(census.slice_rank)});
  }
  return census;
}

}  // namespace diamondlab
