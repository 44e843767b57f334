#include <doctest.h>

#include <limits>
#include <random>

#include "support/oracles.hpp"
#include "support/seed.hpp"
#include "symknot/algebra/abelian_group.hpp"
#include "symknot/algebra/bigraded.hpp"
#include "symknot/algebra/checked.hpp"
#include "symknot/algebra/integer_matrix.hpp"
#include "symknot/algebra/laurent.hpp"
#include "symknot/algebra/smith.hpp"
#include "symknot/errors.hpp"

using namespace symknot;
using namespace symknot::algebra;

namespace {

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> val(-bound, bound);
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = val(rng);
  return m;
}

test::DenseMatrix dense(const IntegerMatrix& m) {
  test::DenseMatrix d(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m(i, j);
  return d;
}

/// Random product of elementary operations, hence unimodular.
IntegerMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntegerMatrix u = IntegerMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> f(-3, 3);
  for (int k = 0; k < 12; ++k) {
    const std::size_t a = idx(rng), b = idx(rng);
    if (a != b) u.add_row_multiple(a, b, f(rng));
    if (k % 5 == 0) u.swap_rows(a, b);
  }
  return u;
}

LaurentPolynomial random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(-4, 4), c(-5, 5), n(0, 4);
  LaurentPolynomial p;
  for (int k = n(rng); k > 0; --k) p += LaurentPolynomial::monomial(e(rng), c(rng));
  return p;
}

}  // namespace

TEST_SUITE("smith normal form") {
  TEST_CASE("200 random matrices: transforms, divisibility and determinantal divisors") {
    std::mt19937_64 rng(test::seed());
    std::uniform_int_distribution<int> dim(1, 5);
    for (int t = 0; t < 200; ++t) {
      const IntegerMatrix m = random_matrix(rng, dim(rng), dim(rng), 9);
      const SmithForm s = smith_normal_form(m);
      CAPTURE(m.to_string());
      CHECK(s.u * m * s.v == s.d);
      CHECK(s.d.is_diagonal());
      const BigInt du = determinant(s.u), dv = determinant(s.v);
      CHECK((du == 1 || du == -1));
      CHECK((dv == 1 || dv == -1));
      CHECK(s.diagonal == test::determinantal_invariant_factors(dense(m)));
    }
  }

  TEST_CASE("known forms") {
    CHECK(smith_normal_form(IntegerMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}).diagonal ==
          std::vector<BigInt>{2, 6, 12});
    CHECK(smith_normal_form(IntegerMatrix{{0, 0}, {0, 0}}).diagonal == std::vector<BigInt>{0, 0});
    CHECK(smith_normal_form(IntegerMatrix{{7, 28}, {0, 7}}).diagonal == std::vector<BigInt>{7, 7});
  }

  TEST_CASE("cokernel is invariant under unimodular row and column changes") {
    std::mt19937_64 rng(test::seed() + 1);
    for (int t = 0; t < 60; ++t) {
      const IntegerMatrix m = random_matrix(rng, 4, 4, 6);
      const IntegerMatrix p = random_unimodular(rng, 4) * m * random_unimodular(rng, 4).transposed();
      CHECK(cokernel(m) == cokernel(p));
    }
  }

  TEST_CASE("determinant agrees with cofactor expansion") {
    std::mt19937_64 rng(test::seed() + 2);
    for (std::size_t n = 0; n <= 6; ++n)
      for (int t = 0; t < 10; ++t) {
        const IntegerMatrix m = random_matrix(rng, n, n, 20);
        CHECK(determinant(m) == test::cofactor_det(dense(m)));
      }
  }

  TEST_CASE("rank over Q agrees with plain elimination") {
    std::mt19937_64 rng(test::seed() + 3);
    for (int t = 0; t < 40; ++t) {
      IntegerMatrix m = random_matrix(rng, 5, 4, 2);
      if (t % 2 == 0) m.add_row_multiple(4, 0, 3);  // force dependence sometimes
      std::vector<std::vector<Rational>> q(5, std::vector<Rational>(4));
      for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 4; ++j) q[i][j] = Rational(m(i, j));
      CHECK(rank(m) == test::dense_rank_q(q));
    }
  }
}

TEST_SUITE("abelian groups") {
  TEST_CASE("invariant-factor normalisation") {
    const auto g = AbelianGroup::from_cyclic_orders({6, 4, 1, 0});
    CHECK(g.invariant_factors() == std::vector<BigInt>{2, 12});
    CHECK(g.free_rank() == 1);
    CHECK(g.to_string() == "Z + Z/2 + Z/12");
    CHECK(AbelianGroup::from_cyclic_orders({1, 1}).is_trivial());
    CHECK(AbelianGroup::from_cyclic_orders({7, 7}).to_string() == "Z/7 + Z/7");
    CHECK(AbelianGroup::from_cyclic_orders({3, 5}) == AbelianGroup::from_cyclic_orders({15}));
  }

  TEST_CASE("order and primary decomposition") {
    const auto g = AbelianGroup::from_cyclic_orders({12, 18});
    CHECK(g.order() == 216);
    const auto pd = g.primary_decomposition();
    CHECK(pd == std::vector<std::pair<BigInt, BigInt>>{{2, 2}, {2, 4}, {3, 3}, {3, 9}});
    const auto z = AbelianGroup::from_cyclic_orders({0});
    CHECK_THROWS_AS(z.order(), Error);
  }

  TEST_CASE("square-free decomposition") {
    CHECK(is_square_free_decomposition(AbelianGroup::from_cyclic_orders({7, 7})));
    CHECK_FALSE(is_square_free_decomposition(AbelianGroup::from_cyclic_orders({49})));
    CHECK(is_square_free_decomposition(AbelianGroup::from_cyclic_orders({30})));
    CHECK_FALSE(is_square_free_decomposition(AbelianGroup::from_cyclic_orders({2, 4})));
    CHECK(is_square_free_decomposition(AbelianGroup{}));
    const auto z = AbelianGroup::from_cyclic_orders({0});
    CHECK_THROWS_AS(is_square_free_decomposition(z), Error);
    CHECK(is_square_free(1));
    CHECK_FALSE(is_square_free(18));
  }

  TEST_CASE("factorisation multiplies back") {
    std::mt19937_64 rng(test::seed() + 4);
    std::uniform_int_distribution<long long> v(2, 1000000);
    for (int t = 0; t < 100; ++t) {
      const BigInt n = v(rng);
      BigInt prod = 1;
      BigInt last = 1;
      for (const auto& [p, e] : factor_integer(n)) {
        CHECK(p > last);
        last = p;
        prod *= boost::multiprecision::pow(p, e);
      }
      CHECK(prod == n);
    }
  }
}

TEST_SUITE("laurent polynomials") {
  TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(test::seed() + 5);
    for (int t = 0; t < 100; ++t) {
      const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == LaurentPolynomial());
      CHECK(a * LaurentPolynomial(1) == a);
      CHECK(a.pow(3) == a * a * a);
      CHECK(a.inverted().inverted() == a);
      if (!b.is_zero() && (b.coeff(b.max_degree()) == 1 || b.coeff(b.max_degree()) == -1))
        CHECK((a * b).exact_div(b) == a);
    }
  }

  TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(test::seed() + 6);
    for (int t = 0; t < 50; ++t) {
      const auto a = random_poly(rng), b = random_poly(rng);
      for (int x : {-3, -1, 2}) {
        CHECK(laurent_eval(a * b, x) == laurent_eval(a, x) * laurent_eval(b, x));
        CHECK(laurent_eval(a + b, x) == laurent_eval(a, x) + laurent_eval(b, x));
      }
    }
    CHECK(laurent_eval(LaurentPolynomial{{-1, 2}, {0, -3}, {1, 2}}, -1) == Rational(-7));
    const auto inv = LaurentPolynomial::monomial(-1);
    CHECK_THROWS_AS(laurent_eval(inv, 0), Error);
  }

  TEST_CASE("rendering and exponent maps") {
    CHECK(LaurentPolynomial{{-1, 2}, {0, -3}, {1, 2}}.to_string("t") == "2t - 3 + 2t^-1");
    CHECK(LaurentPolynomial().to_string() == "0");
    CHECK(LaurentPolynomial{{2, 1}, {4, -1}}.divide_exponents(2) == LaurentPolynomial{{1, 1}, {2, -1}});
    const LaurentPolynomial t = LaurentPolynomial::monomial(1);
    CHECK_THROWS_AS(t.divide_exponents(2), Error);
    CHECK(t.shifted(3) == LaurentPolynomial::monomial(4));
    const LaurentPolynomial one_plus_t = t + 1, t_minus_one = t - 1;
    CHECK_THROWS_AS(one_plus_t.exact_div(t_minus_one), Error);
  }

  TEST_CASE("coefficient overflow is reported") {
    const auto big = LaurentPolynomial::monomial(0, std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big + big, Error);
    CHECK_THROWS_AS(checked_mul(std::numeric_limits<std::int64_t>::min(), -1), Error);
  }
}

TEST_SUITE("bigraded dimensions") {
  TEST_CASE("shift and unshift are inverse, reflection is an involution") {
    std::mt19937_64 rng(test::seed() + 7);
    std::uniform_int_distribution<int> g(-9, 9), r(1, 4);
    for (int t = 0; t < 50; ++t) {
      BigradedDims d;
      for (int k = 0; k < 6; ++k) d.add(g(rng), g(rng), r(rng));
      const int dq = g(rng), du = g(rng);
      CHECK(d.shifted(dq, du).shifted(-dq, -du) == d);
      CHECK(d.reflected().reflected() == d);
      CHECK(d.shifted(dq, du).total_rank() == d.total_rank());
      CHECK(d.reflected().euler_characteristic() == d.euler_characteristic().inverted());
    }
  }

  TEST_CASE("entries, diagonals and Euler characteristic") {
    BigradedDims d{{{1, 0}, 1}, {{3, 0}, 1}, {{3, 1}, 1}};
    CHECK(d.at(3, 1) == 1);
    CHECK(d.at(5, 5) == 0);
    CHECK(d.total_rank() == 3);
    CHECK(d.diagonals() == std::set<int>{1, 3});
    CHECK(d.euler_characteristic() == LaurentPolynomial{{1, 1}});
    d.subtract(3, 1, 1);
    CHECK(d.euler_characteristic() == LaurentPolynomial{{1, 1}, {3, 1}});
    CHECK_THROWS_AS(d.subtract(3, 1, 1), Error);
    CHECK(d.poincare_string() == "q + q^3");
  }
}
