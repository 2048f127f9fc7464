#include <algorithm>
#include <numeric>
#include <random>

#include "diamondlab/error.hpp"
#include "diamondlab/perm_group.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace diamondlab;

namespace {

CellPerm perm_of(std::initializer_list<int> images) {
  std::vector<int> v(images);
  return CellPerm::from_images(v);
}

}  // namespace

TEST_CASE("CellPerm basics") {
  const CellPerm id;
  CHECK(id.is_identity());
  CHECK_THROWS_AS(perm_of({0, 0, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15}), Error);
  CHECK_THROWS_AS(perm_of({0, 1, 2}), Error);
  CHECK_THROWS_AS(perm_of({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 16}), Error);

  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const auto& g = testing::random_element(rng);
    CHECK((g * g.inverse()).is_identity());
    CHECK(CellPerm::from_packed(g.packed()) == g);
  }
  // Composition applies the right factor first.
  const auto a = axis_perm(Axis::Rows, {1, 0, 2, 3});
  const auto b = axis_perm(Axis::Cols, {1, 2, 3, 0});
  for (int i = 0; i < kCells; ++i) {
    CHECK((a * b)(i) == a(b(i)));
  }
}

TEST_CASE("axis_perm") {
  CHECK(axis_perm(Axis::Rows, {0, 1, 2, 3}).is_identity());
  CHECK_THROWS_AS((void)axis_perm(Axis::Rows, {0, 0, 2, 3}), Error);
  CHECK_THROWS_AS((void)axis_perm(Axis::Quads, {0, 1, 2, 4}), Error);

  const auto swap01 = axis_perm(Axis::Rows, {1, 0, 2, 3});
  for (int i = 0; i < 4; ++i) {
    CHECK(swap01(i) == i + 4);
    CHECK(swap01(i + 4) == i);
  }
  for (int i = 8; i < 16; ++i) {
    CHECK(swap01(i) == i);
  }

  const auto quads = axis_perm(Axis::Quads, {3, 2, 1, 0});
  const auto rows = axis_perm(Axis::Rows, {2, 3, 0, 1});
  const auto cols = axis_perm(Axis::Cols, {2, 3, 0, 1});
  CHECK(quads == rows * cols);
  CHECK(quads == cols * rows);
}

TEST_CASE("generate_closure") {
  const CellPerm id;
  CHECK(generate_closure(std::vector<CellPerm>{id}).size() == 1);

  std::vector<CellPerm> row_swaps;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      std::array<int, 4> s{0, 1, 2, 3};
      std::swap(s[static_cast<std::size_t>(a)], s[static_cast<std::size_t>(b)]);
      row_swaps.push_back(axis_perm(Axis::Rows, s));
    }
  }
  CHECK(generate_closure(row_swaps).size() == 24);

  const auto gens = diamond_generators();
  const std::vector<CellPerm> rows_cols(gens.begin(), gens.begin() + 4);
  CHECK(generate_closure(rows_cols).size() == 576);

  const auto& g = testing::group_g();
  CHECK(g.size() == 322'560);
  CHECK(g.contains(CellPerm{}));
  CHECK(std::is_sorted(g.elements.begin(), g.elements.end(),
                       [](const CellPerm& a, const CellPerm& b) { return a.packed() < b.packed(); }));

  SUBCASE("closed under composition and inverse") {
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 10'000; ++k) {
      const auto& a = testing::random_element(rng);
      const auto& b = testing::random_element(rng);
      REQUIRE(g.contains(a * b));
      REQUIRE(g.contains(a.inverse()));
    }
  }
  SUBCASE("deterministic") {
    const auto again = generate_closure(gens);
    CHECK(again.elements == g.elements);
    CHECK(again.depth == g.depth);
  }
  SUBCASE("cap guard") { CHECK_THROWS_AS((void)generate_closure(gens, 1000), CapExceeded); }
}

TEST_CASE("export lines") {
  std::vector<CellPerm> gens{axis_perm(Axis::Rows, {1, 0, 2, 3})};
  const auto g = generate_closure(gens);
  CHECK(g.export_lines() ==
        "0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15\n"
        "4 5 6 7 0 1 2 3 8 9 10 11 12 13 14 15\n");
}

TEST_CASE("act") {
  const auto d = make_diamond_figure();
  CHECK(act(CellPerm{}, d) == d);
  const auto swapped = act(axis_perm(Axis::Rows, {1, 0, 2, 3}), d);
  CHECK(swapped.encode() == testing::swap_codec_rows(d.encode(), 0, 1));
  CHECK(swapped.encode() == "0202313131310202");

  std::mt19937_64 rng(5);
  for (int k = 0; k < 500; ++k) {
    const auto& g = testing::random_element(rng);
    const auto& h = testing::random_element(rng);
    const auto p = testing::random_pattern(rng);
    CHECK(act(g * h, p) == act(g, act(h, p)));
    CHECK(act(g, d).type_counts() == std::array<int, 4>{4, 4, 4, 4});
  }
}

TEST_CASE("orbit") {
  const auto gens = diamond_generators();
  const auto& o = testing::orbit_of_d();
  CHECK(o.size() == 840);
  CHECK(std::is_sorted(o.begin(), o.end()));
  CHECK(std::adjacent_find(o.begin(), o.end()) == o.end());
  for (const auto& p : o) {
    REQUIRE(p.type_counts() == std::array<int, 4>{4, 4, 4, 4});
  }
  CHECK(orbit(Pattern{}, gens).size() == 1);
  CHECK(testing::group_g().size() / o.size() == 384);
  CHECK(testing::group_g().size() % o.size() == 0);

  // Direct stabilizer count agrees with orbit-stabilizer arithmetic.
  const auto d = make_diamond_figure();
  std::size_t stab = 0;
  for (const auto& g : testing::group_g().elements) {
    stab += act(g, d) == d ? 1 : 0;
  }
  CHECK(stab == 384);

  CHECK_THROWS_AS((void)orbit(make_diamond_figure(), gens, 100), CapExceeded);
}

TEST_CASE("as_affine") {
  const auto id = as_affine(CellPerm{});
  REQUIRE(id);
  CHECK(*id == AffineMap{});

  const auto rows = as_affine(axis_perm(Axis::Rows, {1, 0, 2, 3}));
  REQUIRE(rows);
  CHECK(rows->translation == coord::kR0);
  CHECK(rows->linear(coord::kR1) == (coord::kR1 | coord::kR0));  // r0' = r0 + r1
  CHECK(rows->linear(coord::kR0) == coord::kR0);
  CHECK(rows->linear(coord::kC1) == coord::kC1);
  CHECK(rows->linear(coord::kC0) == coord::kC0);

  const auto five_cycle = perm_of({1, 2, 3, 4, 0, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15});
  CHECK_FALSE(as_affine(five_cycle));
  CHECK_FALSE(testing::brute_force_is_affine(five_cycle.images()));

  for (const auto& g : diamond_generators()) {
    const auto a = as_affine(g);
    REQUIRE(a);
    CHECK(a->invertible());
    CHECK(testing::brute_force_is_affine(g.images()));
  }
  for (const auto& g : testing::group_g().elements) {
    REQUIRE(as_affine(g).has_value());
  }

  SUBCASE("agrees with brute force on random permutations") {
    std::mt19937_64 rng(99);
    for (int k = 0; k < 5; ++k) {
      std::array<int, 16> img{};
      std::iota(img.begin(), img.end(), 0);
      std::shuffle(img.begin(), img.end(), rng);
      const auto g = CellPerm::from_images(img);
      CHECK(as_affine(g).has_value() == testing::brute_force_is_affine(g.images()));
    }
  }
}

TEST_CASE("affine_group_order") {
  CHECK(affine_group_order(1) == 2);
  CHECK(affine_group_order(2) == 24);
  CHECK(affine_group_order(3) == 1344);
  CHECK(affine_group_order(4) == 322'560);
  CHECK_THROWS_AS((void)affine_group_order(0), Error);
  CHECK_THROWS_AS((void)affine_group_order(8), Error);
}
