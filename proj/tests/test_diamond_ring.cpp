#include <algorithm>
#include <random>
#include <set>

#include "diamondlab/diamond_ring.hpp"
#include "diamondlab/error.hpp"
#include "diamondlab/symmetry.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace diamondlab;

namespace {

using Grid = std::array<std::array<int, 4>, 4>;

Grid grid_from_bits(std::uint32_t bits) {
  Grid g{};
  for (int i = 0; i < 16; ++i) {
    g[static_cast<std::size_t>(i / 4)][static_cast<std::size_t>(i % 4)] = static_cast<int>((bits >> i) & 1U);
  }
  return g;
}

// Relation bits along one internal line, read from a grid already reduced
// to "color of the edge on the first side".
bool line_ok(const std::array<int, 4>& rel, CutDefinition def) {
  switch (def) {
    case CutDefinition::ConstantRelation:
      return rel[0] == rel[1] && rel[1] == rel[2] && rel[2] == rel[3];
    case CutDefinition::AllContrast:
      return rel == std::array<int, 4>{1, 1, 1, 1};
    case CutDefinition::AllMatch:
      return rel == std::array<int, 4>{0, 0, 0, 0};
  }
  return false;
}

// Horizontal lines see the bottom edge (s) above and the top edge (1 + s)
// below; vertical lines see the right edge (1 + s + d) and left edge (s + d).
bool horizontal_ok(const Grid& s, CutDefinition def) {
  for (int r = 0; r < 3; ++r) {
    std::array<int, 4> rel{};
    for (int c = 0; c < 4; ++c) {
      rel[static_cast<std::size_t>(c)] = s[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] ^
                                         s[static_cast<std::size_t>(r + 1)][static_cast<std::size_t>(c)] ^ 1;
    }
    if (!line_ok(rel, def)) {
      return false;
    }
  }
  return true;
}

bool vertical_ok(const Grid& t, CutDefinition def) {
  for (int c = 0; c < 3; ++c) {
    std::array<int, 4> rel{};
    for (int r = 0; r < 4; ++r) {
      rel[static_cast<std::size_t>(r)] = t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] ^ 1 ^
                                         t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)];
    }
    if (!line_ok(rel, def)) {
      return false;
    }
  }
  return true;
}

bool oracle_cuts(const Gf4Pattern& p, CutDefinition def) {
  Grid s{};
  Grid t{};
  for (int i = 0; i < 16; ++i) {
    s[static_cast<std::size_t>(i / 4)][static_cast<std::size_t>(i % 4)] = p.at(i).s();
    t[static_cast<std::size_t>(i / 4)][static_cast<std::size_t>(i % 4)] = p.at(i).s() ^ p.at(i).d();
  }
  return horizontal_ok(s, def) && vertical_ok(t, def);
}

// Affine iff every 4-term sum g(x)+g(y)+g(z)+g(x+y+z) vanishes.
bool oracle_affine_grid(const std::array<int, 16>& g) {
  for (int x = 0; x < 16; ++x) {
    for (int y = 0; y < 16; ++y) {
      for (int z = 0; z < 16; ++z) {
        if ((g[static_cast<std::size_t>(x)] ^ g[static_cast<std::size_t>(y)] ^ g[static_cast<std::size_t>(z)] ^
             g[static_cast<std::size_t>(x ^ y ^ z)]) != 0) {
          return false;
        }
      }
    }
  }
  return true;
}

bool oracle_affine(const Gf4Pattern& p) {
  std::array<int, 16> s{};
  std::array<int, 16> d{};
  for (int i = 0; i < 16; ++i) {
    s[static_cast<std::size_t>(i)] = p.at(i).s();
    d[static_cast<std::size_t>(i)] = p.at(i).d();
  }
  return oracle_affine_grid(s) && oracle_affine_grid(d);
}

int linear_part(const Gf4Pattern& p, bool d_bit) {
  auto bit = [&](int cell) { return d_bit ? p.at(cell).d() : p.at(cell).s(); };
  int f = 0;
  for (int k = 0; k < 4; ++k) {
    f |= (bit(1 << k) ^ bit(0)) << k;
  }
  return f;
}

}  // namespace

TEST_CASE("GF(4) pattern arithmetic") {
  const auto d = Gf4Pattern::from_pattern(make_diamond_figure());
  CHECK(d.to_pattern() == make_diamond_figure());
  CHECK(d.key() == make_diamond_figure().key());
  CHECK(Gf4Pattern::from_key(d.key()) == d);
  CHECK(d + d == Gf4Pattern{});
  CHECK((d + Gf4Pattern::constant(Gf4::one())).to_pattern() == color_interchange(make_diamond_figure()));
  CHECK(pattern_add(d, Gf4Pattern::constant(Gf4::omega())).to_pattern().encode() == "1313202013132020");
}

TEST_CASE("affine pattern test against the four-term oracle") {
  const auto aff = affine_patterns();
  REQUIRE(aff.size() == 1024);
  CHECK(std::is_sorted(aff.begin(), aff.end(), [](const auto& a, const auto& b) { return a.key() < b.key(); }));
  for (std::size_t i = 0; i < aff.size(); i += 37) {
    CHECK(oracle_affine(aff[i]));
    CHECK(is_affine_pattern(aff[i]));
  }
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    const auto p = Gf4Pattern::from_key(static_cast<std::uint32_t>(rng()));
    REQUIRE(is_affine_pattern(p) == oracle_affine(p));
  }
}

TEST_CASE("the orbit is the affine patterns with distinct nonzero linear parts") {
  const auto& orb = testing::orbit_of_d();
  std::set<std::uint32_t> from_params;
  for (const auto& p : affine_patterns()) {
    const int fs = linear_part(p, false);
    const int fd = linear_part(p, true);
    if (fs != 0 && fd != 0 && fs != fd) {
      from_params.insert(p.key());
    }
  }
  CHECK(from_params.size() == 15 * 14 * 4);
  std::set<std::uint32_t> orbit_keys;
  for (const auto& p : orb) {
    orbit_keys.insert(p.key());
  }
  CHECK(orbit_keys == from_params);
}

TEST_CASE("G preserves the affine set") {
  std::mt19937_64 rng(8);
  const auto aff = affine_patterns();
  for (int k = 0; k < 100; ++k) {
    const auto& g = testing::random_element(rng);
    const auto& p = aff[rng() % aff.size()];
    REQUIRE(is_affine_pattern(Gf4Pattern::from_pattern(act(g, p.to_pattern()))));
  }
}

TEST_CASE("additive closure of the orbit is the ideal of 1024 symmetric patterns") {
  std::vector<Gf4Pattern> seeds;
  for (const auto& p : testing::orbit_of_d()) {
    seeds.push_back(Gf4Pattern::from_pattern(p));
  }
  const auto closure = additive_closure(seeds);
  REQUIRE(closure.size() == 1024);
  const auto aff = affine_patterns();
  CHECK(std::equal(closure.begin(), closure.end(), aff.begin(), aff.end()));
  for (const auto& p : closure) {
    REQUIRE(symmetry_profile(p.to_pattern()).has_symmetry());
  }
  CHECK_THROWS_AS((void)additive_closure(seeds, 100), CapExceeded);
  const std::vector<Gf4Pattern> one{seeds.front()};
  CHECK(additive_closure(one).size() == 2);
}

TEST_CASE("GF(2) systems") {
  Gf2System sys(3);
  sys.add(0b011, true);
  sys.add(0b001, true);
  CHECK(sys.rank() == 2);
  CHECK(sys.consistent());
  CHECK(sys.solution_count() == 2);
  sys.add(0b010, true);
  CHECK_FALSE(sys.consistent());
  CHECK(sys.solution_count() == 0);
  Gf2System empty(5);
  CHECK(empty.solution_count() == 32);
  CHECK_THROWS_AS(Gf2System(64), Error);
}

TEST_CASE("cut census against a separable brute-force count") {
  for (const auto def : kCutDefinitions) {
    std::uint64_t h = 0;
    std::uint64_t v = 0;
    for (std::uint32_t bits = 0; bits < (1U << 16); ++bits) {
      const auto g = grid_from_bits(bits);
      h += horizontal_ok(g, def) ? 1 : 0;
      v += vertical_ok(g, def) ? 1 : 0;
    }
    const auto census = cut_census(def);
    CHECK(census.count == h * v);
    CHECK(census.slice_scan == census.slice_rank);
    CHECK_FALSE(census.equals_affine_set);
  }
  CHECK(cut_census(CutDefinition::ConstantRelation).count == 16384);
  CHECK(cut_census(CutDefinition::AllContrast).count == 256);
  CHECK(cut_census(CutDefinition::AllMatch).count == 256);
}

TEST_CASE("cut predicate agrees with the oracle") {
  std::mt19937_64 rng(12);
  std::vector<Gf4Pattern> sample = affine_patterns();
  for (int k = 0; k < 500; ++k) {
    sample.push_back(Gf4Pattern::from_key(static_cast<std::uint32_t>(rng())));
  }
  for (const auto def : kCutDefinitions) {
    for (const auto& p : sample) {
      REQUIRE(cuts_uninterrupted(p, def) == oracle_cuts(p, def));
    }
  }
  for (const auto def : kCutDefinitions) {
    CHECK(parse_cut_definition(cut_definition_name(def)) == def);
  }
  CHECK_THROWS_AS((void)parse_cut_definition("sometimes"), Error);
}
