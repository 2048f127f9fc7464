#include <random>
#include <set>

#include "diamondlab/error.hpp"
#include "diamondlab/pattern.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace diamondlab;

TEST_CASE("tile types and color interchange") {
  std::set<int> digits;
  for (int k = 0; k < 4; ++k) {
    const auto t = TileType::from_digit(k);
    digits.insert(t.digit());
    CHECK(color_interchange(t).d == t.d);
    CHECK(color_interchange(t).s == (t.s ^ 1));
    CHECK(color_interchange(color_interchange(t)) == t);
  }
  CHECK(digits.size() == 4);
}

TEST_CASE("cell coordinates are a bijection onto GF(2)^4") {
  std::set<int> vecs;
  for (int cell = 0; cell < kCells; ++cell) {
    const auto c = CellCoord::from_index(cell);
    vecs.insert(c.vec());
    CHECK(CellCoord::from_vec(c.vec()) == c);
    CHECK(c.index() == cell);
  }
  CHECK(vecs.size() == 16);
  CHECK(CellCoord{2, 1}.vec() == (coord::kR1 | coord::kC0));
}

TEST_CASE("four-diamond figure") {
  const auto d = make_diamond_figure();
  CHECK(d.encode() == "3131020231310202");
  CHECK(d.type_counts() == std::array<int, 4>{4, 4, 4, 4});
  for (int cell = 0; cell < kCells; ++cell) {
    const auto v = CellCoord::from_index(cell).vec();
    const int r0 = (v >> 2) & 1;
    const int c0 = v & 1;
    CHECK(d.at(cell).s == (1 ^ r0));
    CHECK(d.at(cell).d == (1 ^ r0 ^ c0));
  }
}

TEST_CASE("four-diamond figure: each quadrant's dark triangles touch the quadrant centre") {
  const auto d = make_diamond_figure();
  for (int cell = 0; cell < kCells; ++cell) {
    const auto [r, c] = CellCoord::from_index(cell);
    const auto e = tile_edge_colors(d.at(cell));
    // The quadrant centre is the corner shared by the edges facing it.
    const bool centre_below = (r & 1) == 0;
    const bool centre_right = (c & 1) == 0;
    CHECK((centre_below ? e.bottom : e.top) == 1);
    CHECK((centre_right ? e.right : e.left) == 1);
  }
}

TEST_CASE("codec") {
  CHECK(Pattern::decode("3131020231310202") == make_diamond_figure());
  const auto zero = Pattern::decode("0000000000000000");
  for (int i = 0; i < kCells; ++i) {
    CHECK(zero.at(i) == TileType{0, 0});
  }

  SUBCASE("bad character reports its index") {
    try {
      (void)Pattern::decode("313102023131020X");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.index() == 15);
    }
    try {
      (void)Pattern::decode("3134");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.index() == 3);
    }
  }
  SUBCASE("wrong length") {
    CHECK_THROWS_AS((void)Pattern::decode("313102023131020"), ParseError);
    CHECK_THROWS_AS((void)Pattern::decode("31310202313102020"), ParseError);
    CHECK_THROWS_AS((void)Pattern::decode(""), ParseError);
  }
  SUBCASE("round trip on random patterns and the orbit") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 2000; ++k) {
      const auto p = testing::random_pattern(rng);
      CHECK(Pattern::decode(p.encode()) == p);
      CHECK(Pattern::from_key(p.key()) == p);
    }
    for (const auto& p : testing::orbit_of_d()) {
      REQUIRE(Pattern::decode(p.encode()) == p);
    }
  }
  SUBCASE("key order matches codec order") {
    std::mt19937_64 rng(8);
    for (int k = 0; k < 500; ++k) {
      const auto a = testing::random_pattern(rng);
      const auto b = testing::random_pattern(rng);
      CHECK((a < b) == (a.encode() < b.encode()));
    }
  }
}

TEST_CASE("GF(4) field axioms by exhaustion") {
  std::vector<Gf4> all;
  for (std::uint8_t v = 0; v < 4; ++v) {
    all.push_back(Gf4::from_bits(v));
  }
  for (const auto a : all) {
    CHECK(a + Gf4::zero() == a);
    CHECK(a * Gf4::one() == a);
    CHECK(a + a == Gf4::zero());
    if (a != Gf4::zero()) {
      CHECK(a * a.inverse() == Gf4::one());
    }
    for (const auto b : all) {
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      for (const auto c : all) {
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
      }
    }
  }
  CHECK(Gf4::omega() * Gf4::omega() == Gf4::omega2());
  CHECK(Gf4::omega() + Gf4::one() == Gf4::omega2());
  CHECK(Gf4::omega() * Gf4::omega2() == Gf4::one());
}

TEST_CASE("tile_to_gf4") {
  CHECK(tile_to_gf4(TileType{0, 0}) == Gf4::zero());
  CHECK(tile_to_gf4(TileType{1, 0}) == Gf4::omega());
  CHECK(tile_to_gf4(TileType{1, 1}) == Gf4::omega2());
  CHECK(tile_to_gf4(TileType{0, 1}) == Gf4::one());
  for (int k = 0; k < 4; ++k) {
    const auto t = TileType::from_digit(k);
    CHECK(gf4_to_tile(tile_to_gf4(t)) == t);
    CHECK(tile_to_gf4(color_interchange(t)) == tile_to_gf4(t) + Gf4::one());
  }
}

TEST_CASE("component maps") {
  const auto d = make_diamond_figure();
  CHECK(component_map(d, Component::S).bits == 0x0F0F);  // rows 0 and 2
  const auto dgrid = component_map(d, Component::D);
  for (int cell = 0; cell < kCells; ++cell) {
    const auto [r, c] = CellCoord::from_index(cell);
    CHECK(dgrid.at(cell) == ((r & 1) == (c & 1)));
  }
  std::mt19937_64 rng(3);
  for (int k = 0; k < 1000; ++k) {
    const auto p = testing::random_pattern(rng);
    CHECK((component_map(p, Component::S) ^ component_map(p, Component::D)) == component_map(p, Component::SD));
  }
  for (const auto& p : testing::orbit_of_d()) {
    REQUIRE((component_map(p, Component::S) ^ component_map(p, Component::D)) == component_map(p, Component::SD));
  }
}

TEST_CASE("tile edge colors") {
  const auto e = tile_edge_colors(TileType{0, 1});
  CHECK(e == EdgeColors{0, 1, 1, 0});
  for (int k = 0; k < 4; ++k) {
    const auto c = tile_edge_colors(TileType::from_digit(k));
    CHECK((c.top ^ c.bottom) == 1);
    CHECK((c.left ^ c.right) == 1);
  }
}
