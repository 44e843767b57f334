#include "symknot/polynomials/alexander.hpp"

#include <numeric>
#include <sstream>

#include "symknot/algebra/integer_matrix.hpp"
#include "symknot/errors.hpp"

namespace symknot::polynomials {

using algebra::BigInt;
using algebra::IntegerMatrix;
using algebra::Rational;
using diagram::make_slot;
using diagram::PlanarDiagram;

std::string WirtingerPresentation::to_string() const {
  std::ostringstream out;
  out << "<";
  for (std::size_t g = 0; g < generators; ++g) out << (g ? ", " : " ") << "x" << g + 1;
  out << " |";
  for (std::size_t r = 0; r < relators.size(); ++r) {
    out << (r ? ", " : " ");
    for (const Letter& l : relators[r]) {
      out << "x" << l.generator + 1;
      if (l.exponent < 0) out << "^-1";
    }
  }
  out << " >";
  return out.str();
}

WirtingerPresentation wirtinger(const PlanarDiagram& d) {
  WirtingerPresentation w;
  const std::size_t n_arcs = d.arc_count();
  // PD arcs meeting at an overpass belong to the same generator.
  std::vector<std::size_t> parent(n_arcs);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t c = 0; c < d.crossing_count(); ++c)
    parent[find(d.arc_index(d.arc_at(make_slot(c, 1))))] = find(d.arc_index(d.arc_at(make_slot(c, 3))));
  std::vector<std::size_t> id(n_arcs, static_cast<std::size_t>(-1));
  w.arc_generator.resize(n_arcs);
  for (std::size_t a = 0; a < n_arcs; ++a) {
    const std::size_t root = find(a);
    if (id[root] == static_cast<std::size_t>(-1)) id[root] = w.generators++;
    w.arc_generator[a] = id[root];
  }
  w.generators += d.free_loops();
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    const std::size_t i = w.arc_generator[d.arc_index(d.arc_at(make_slot(c, 0)))];
    const std::size_t j = w.arc_generator[d.arc_index(d.arc_at(make_slot(c, 2)))];
    const std::size_t o = w.arc_generator[d.arc_index(d.arc_at(make_slot(c, 1)))];
    const int s = d.sign(c);
    w.relators.push_back({{o, s}, {i, 1}, {o, -s}, {j, -1}});
  }
  return w;
}

std::vector<std::vector<LaurentPolynomial>> alexander_matrix(const WirtingerPresentation& w, const PlanarDiagram& d) {
  std::vector<std::vector<LaurentPolynomial>> m(w.relators.size(), std::vector<LaurentPolynomial>(w.generators));
  const LaurentPolynomial t = LaurentPolynomial::monomial(1);
  for (std::size_t r = 0; r < w.relators.size(); ++r) {
    const auto& rel = w.relators[r];
    const std::size_t o = rel[0].generator, i = rel[1].generator, j = rel[3].generator;
    if (d.sign(r) > 0) {
      m[r][i] += t;
      m[r][j] -= 1;
      m[r][o] += 1 - t;
    } else {
      m[r][i] += 1;
      m[r][j] -= t;
      m[r][o] += t - 1;
    }
  }
  return m;
}

namespace {

// Determinant of a polynomial matrix (entries of degree <= 1 in t, no
// negative powers) by evaluation and Newton interpolation.
LaurentPolynomial polynomial_determinant(const std::vector<std::vector<LaurentPolynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPolynomial(1);
  int max_deg = 0;
  for (const auto& row : m)
    for (const auto& e : row)
      if (!e.is_zero()) max_deg = std::max(max_deg, e.max_degree());
  const std::size_t points = static_cast<std::size_t>(max_deg) * n + 1;
  std::vector<BigInt> xs, ys;
  for (std::size_t k = 0; k < points; ++k) {
    const BigInt x = static_cast<long>(k);
    IntegerMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a(r, c) = numerator(algebra::laurent_eval(m[r][c], x));
    xs.push_back(x);
    ys.push_back(algebra::determinant(a));
  }
  // Newton divided differences, then expand to monomials.
  std::vector<Rational> coef(ys.begin(), ys.end());
  for (std::size_t level = 1; level < points; ++level)
    for (std::size_t k = points - 1; k >= level; --k)
      coef[k] = (coef[k] - coef[k - 1]) / Rational(xs[k] - xs[k - level]);
  std::vector<Rational> poly{coef[points - 1]};
  for (std::size_t k = points - 1; k-- > 0;) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t e = 0; e < poly.size(); ++e) {
      next[e + 1] += poly[e];
      next[e] -= poly[e] * Rational(xs[k]);
    }
    next[0] += coef[k];
    poly = std::move(next);
  }
  LaurentPolynomial out;
  for (std::size_t e = 0; e < poly.size(); ++e) {
    if (denominator(poly[e]) != 1) throw Error(ErrorCode::InconsistentSystem, "non-integral Alexander determinant");
    const BigInt v = numerator(poly[e]);
    if (v != 0) out += LaurentPolynomial::monomial(static_cast<int>(e), static_cast<std::int64_t>(v));
  }
  return out;
}

}  // namespace

LaurentPolynomial alexander(const PlanarDiagram& d) {
  if (!d.is_knot()) throw Error(ErrorCode::Domain, "Alexander polynomial is computed for knots only");
  if (d.crossing_count() == 0) return LaurentPolynomial(1);
  const auto w = wirtinger(d);
  const auto full = alexander_matrix(w, d);
  const std::size_t n = full.size();
  // Delete the first generator's column and one relator row; fall back to
  // other rows if the minor vanishes.
  LaurentPolynomial det;
  for (std::size_t skip = n; skip-- > 0 && det.is_zero();) {
    std::vector<std::vector<LaurentPolynomial>> minor;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == skip) continue;
      minor.emplace_back(full[r].begin() + 1, full[r].end());
    }
    det = polynomial_determinant(minor);
  }
  if (det.is_zero()) throw Error(ErrorCode::InconsistentSystem, "all Alexander minors vanish");

  const int lo = det.min_degree(), hi = det.max_degree();
  if ((lo + hi) % 2 != 0) throw Error(ErrorCode::InconsistentSystem, "Alexander polynomial has odd span");
  LaurentPolynomial delta = det.shifted(-(lo + hi) / 2);
  const Rational at_one = algebra::laurent_eval(delta, 1);
  if (at_one == -1) delta = -delta;
  else if (at_one != 1) throw Error(ErrorCode::InconsistentSystem, "Alexander polynomial has |Delta(1)| != 1");
  if (delta != delta.inverted()) throw Error(ErrorCode::InconsistentSystem, "Alexander polynomial is not symmetric");
  return delta;
}

BigInt determinant_alexander(const PlanarDiagram& d) {
  const Rational v = algebra::laurent_eval(alexander(d), -1);
  return abs(numerator(v));
}

}  // namespace symknot::polynomials
