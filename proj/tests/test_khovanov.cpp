#include <doctest.h>

#include <cstdlib>
#include <random>
#include <set>

#include "support/oracles.hpp"
#include "support/seed.hpp"
#include "symknot/diagram/fixtures.hpp"
#include "symknot/diagram/surgery.hpp"
#include "symknot/errors.hpp"
#include "symknot/goeritz/goeritz.hpp"
#include "symknot/khovanov/homology.hpp"
#include "symknot/khovanov/sparse_rank.hpp"
#include "symknot/polynomials/jones.hpp"

using namespace symknot;
using namespace symknot::khovanov;
using algebra::BigradedDims;
using diagram::build_kn;
using diagram::fixture;
using diagram::fixtures;

TEST_SUITE("sparse rank") {
  TEST_CASE("agrees with dense elimination on random matrices") {
    std::mt19937_64 rng(test::seed());
    std::uniform_int_distribution<int> dim(1, 14), val(-3, 3), density(0, 9);
    for (int t = 0; t < 300; ++t) {
      const std::size_t rows = dim(rng), cols = dim(rng);
      std::vector<SparseRow> sparse(rows);
      std::vector<std::vector<algebra::Rational>> q(rows, std::vector<algebra::Rational>(cols));
      std::vector<std::vector<int>> f2(rows, std::vector<int>(cols));
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
          if (density(rng) > 3) continue;
          const int v = val(rng);
          if (v == 0) continue;
          sparse[i].push_back({static_cast<std::uint32_t>(j), v});
          q[i][j] = v;
          f2[i][j] = v & 1;
        }
      if (rows > 2 && t % 3 == 0) {  // add a dependent row
        sparse[rows - 1] = sparse[0];
        q[rows - 1] = q[0];
        f2[rows - 1] = f2[0];
      }
      CHECK(sparse_rank(sparse, cols, Field::Rational) == test::dense_rank_q(q));
      CHECK(sparse_rank(sparse, cols, Field::F2) == test::dense_rank_f2(f2));
    }
  }

  TEST_CASE("large entries fall through to the exact remainder") {
    std::vector<SparseRow> rows{{{0, 1000000007}, {1, 2}}, {{0, 999999937}, {1, 3}}};
    RankStats stats;
    CHECK(sparse_rank(rows, 2, Field::Rational, &stats) == 2);
    CHECK(stats.residual_rows > 0);
  }
}

TEST_SUITE("resolution cube") {
  TEST_CASE("circle counts and edge types") {
    const ResolutionCube kink(fixture("unknot_kink"), 20);
    CHECK(kink.vertex_count() == 2);
    CHECK(std::set<std::size_t>{kink.circles(0), kink.circles(1)} == std::set<std::size_t>{1, 2});

    const auto t = fixture("3_1");
    const ResolutionCube cube(t, 20);
    CHECK(cube.vertex_count() == 8);
    // A-state and B-state of a reduced alternating trefoil have 2 and 3 circles.
    CHECK(std::set<std::size_t>{cube.circles(0), cube.circles(7)} == std::set<std::size_t>{2, 3});
    for (const char* name : {"3_1", "5_2", "hopf_negative"}) {
      const ResolutionCube c(fixture(name), 20);
      for (std::uint64_t v = 0; v < c.vertex_count(); ++v)
        for (std::size_t i = 0; i < c.crossings(); ++i) {
          if (v & (std::uint64_t{1} << i)) continue;
          const auto e = c.edge(v, i);
          const std::size_t w = v | (std::uint64_t{1} << i);
          CHECK(c.circles(w) + (e.merge ? 1 : 0) == c.circles(v) + (e.merge ? 0 : 1));
        }
    }
    CHECK(build_cube(build_kn(1).diagram, 20).vertex_count() == 2048);
    CHECK_THROWS_AS(build_cube(build_kn(1).diagram, 10), BudgetError);
  }
}

TEST_SUITE("khovanov homology") {
  TEST_CASE("quantum grading parity matches the component count") {
    for (const auto& f : fixtures()) {
      const auto d = fixture(f.name);
      const auto r = kh_homology(d, Field::F2);
      for (const auto& [g, rank] : r.dims.entries())
        CHECK(((g.q % 2) + 2) % 2 == static_cast<int>(d.components() % 2));
    }
  }

  TEST_CASE("d squared vanishes") {
    for (const auto& f : fixtures()) CHECK(check_d_squared(fixture(f.name)));
  }

  TEST_CASE("known small values") {
    const auto unknot = kh_homology(diagram::PlanarDiagram::unknot(), Field::Rational).dims;
    CHECK(unknot == BigradedDims{{{-1, 0}, 1}, {{1, 0}, 1}});
    CHECK(kh_homology(fixture("unknot_kink"), Field::F2).dims == unknot);
    CHECK(kh_homology(fixture("unlink_2"), Field::Rational).dims == BigradedDims{{{-2, 0}, 1}, {{0, 0}, 2}, {{2, 0}, 1}});
    CHECK(kh_homology(fixture("hopf_negative"), Field::Rational).dims ==
          BigradedDims{{{0, 0}, 1}, {{-2, 0}, 1}, {{-4, -2}, 1}, {{-6, -2}, 1}});
    const BigradedDims right_trefoil{{{1, 0}, 1}, {{3, 0}, 1}, {{5, 2}, 1}, {{9, 3}, 1}};
    const auto t = kh_homology(fixture("3_1"), Field::Rational).dims;
    CHECK((t == right_trefoil || t == right_trefoil.reflected()));
    const BigradedDims right_trefoil_f2{{{1, 0}, 1}, {{3, 0}, 1}, {{5, 2}, 1}, {{7, 2}, 1}, {{7, 3}, 1}, {{9, 3}, 1}};
    const auto t2 = kh_homology(fixture("3_1"), Field::F2).dims;
    CHECK((t2 == right_trefoil_f2 || t2 == right_trefoil_f2.reflected()));
  }

  TEST_CASE("5_2 over Q is the published thin table") {
    const BigradedDims expect{{{1, 0}, 1}, {{3, 0}, 1}, {{3, 1}, 1}, {{5, 2}, 1},
                              {{7, 2}, 1}, {{9, 3}, 1}, {{9, 4}, 1}, {{13, 5}, 1}};
    const auto r = kh_homology(fixture("5_2"), Field::Rational);
    CHECK(r.dims == expect);
    CHECK(is_thin(r).thin);
    CHECK(r.n_plus == 5);
  }

  TEST_CASE("Euler characteristic is the unnormalized Jones polynomial") {
    for (const auto& f : fixtures()) {
      const auto d = fixture(f.name);
      const auto j = polynomials::jones_unnormalized(d);
      for (Field field : {Field::Rational, Field::F2}) CHECK(kh_homology(d, field).dims.euler_characteristic() == j);
    }
    for (int n = -2; n <= 2; ++n) {
      const auto d = build_kn(n).diagram;
      CHECK(kh_homology(d, Field::F2).dims.euler_characteristic() == polynomials::jones_unnormalized(d));
    }
  }

  TEST_CASE("mirror reflects the bigrading over both fields") {
    for (const auto& f : fixtures()) {
      const auto d = fixture(f.name);
      for (Field field : {Field::Rational, Field::F2})
        CHECK(kh_homology(diagram::mirror(d), field).dims == kh_homology(d, field).dims.reflected());
    }
    CHECK(kh_homology(build_kn(-1).diagram, Field::Rational).dims ==
          kh_homology(build_kn(1).diagram, Field::Rational).dims.reflected());
  }

  TEST_CASE("F2 ranks dominate rational ranks") {
    for (const auto& f : fixtures()) {
      const auto d = fixture(f.name);
      const auto q = kh_homology(d, Field::Rational).dims;
      const auto f2 = kh_homology(d, Field::F2).dims;
      for (const auto& [g, r] : q.entries()) CHECK(f2.at(g.q, g.u) >= r);
    }
  }

  TEST_CASE("worker count does not change the result") {
    const auto d = build_kn(1).diagram;
    CHECK(kh_homology(d, Field::Rational, {0, 1}).dims == kh_homology(d, Field::Rational, {0, 3}).dims);
    CHECK(kh_homology(d, Field::F2, {0, 4}).dims == kh_homology(d, Field::F2, {0, 1}).dims);
  }

  TEST_CASE("crossing budget") {
    CHECK_THROWS_AS(kh_homology(fixture("5_2"), Field::Rational, {4, 1}), BudgetError);
    CHECK(default_budget().rational == 16);
    CHECK(default_budget().f2 == 20);
    setenv("SYMKNOT_BUDGET", "9", 1);
    CHECK(default_budget().rational == 9);
    CHECK_THROWS_AS(kh_homology(fixture("10_22"), Field::F2), BudgetError);
    unsetenv("SYMKNOT_BUDGET");
  }

  TEST_CASE("thinness") {
    CHECK(is_thin(kh_homology(fixture("10_22"), Field::Rational)).thin);
    const BigradedDims wide{{{1, 0}, 1}, {{3, 0}, 1}, {{9, 0}, 1}};
    CHECK_FALSE(is_thin(wide).thin);
    CHECK(is_thin(wide).diagonals.size() == 3);
  }

  TEST_CASE("reduced F2 homology has rank det on fixture knots") {
    for (const auto& f : fixtures()) {
      const auto d = fixture(f.name);
      if (!d.is_knot()) continue;
      const auto r = kh_homology(d, Field::F2);
      const auto red = reduced_f2_dims(r);
      CHECK(red.total_rank() == goeritz::determinant_goeritz(d));
      CHECK(red.total_rank() * 2 == r.dims.total_rank());
    }
  }

  TEST_CASE("closed formula") {
    for (int n = -4; n <= 6; ++n) {
      const auto f = closed_formula_kn(n);
      CAPTURE(n);
      CHECK(f.total_rank() == 50);
      CHECK(is_thin(f).thin);
      CHECK(f.euler_characteristic() == polynomials::jones_unnormalized(build_kn(n).diagram));
      CHECK(closed_formula_kn(-n) == f.reflected());
    }
    for (int n = -2; n <= 2; ++n) CHECK(kh_homology(build_kn(n).diagram, Field::Rational).dims == closed_formula_kn(n));
  }

  TEST_CASE("unoriented skein sequence at every crossing of the fixtures") {
    for (const auto& f : fixtures()) {
      const auto d = fixture(f.name);
      for (std::size_t c = 0; c < d.crossing_count(); ++c) {
        CAPTURE(f.name);
        CAPTURE(c);
        CHECK(skein_consistency(d, c, Field::Rational).passed());
      }
    }
    CHECK(skein_consistency(fixture("5_2"), 2, Field::F2).passed());
  }
}
