#include "symknot/polynomials/jones.hpp"

#include <numeric>
#include <vector>

#include "symknot/errors.hpp"

namespace symknot::polynomials {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::uint32_t> parent;
};

}  // namespace

LaurentPolynomial kauffman_bracket(const diagram::PlanarDiagram& d) {
  const std::size_t c = d.crossing_count();
  if (c > kBracketCrossingLimit)
    throw BudgetError("bracket state sum refused: " + std::to_string(c) + " crossings exceeds " +
                      std::to_string(kBracketCrossingLimit));
  const std::size_t arcs = d.arc_count();
  std::vector<std::uint32_t> arc_of(4 * c);
  for (diagram::Slot s = 0; s < 4 * c; ++s) arc_of[s] = static_cast<std::uint32_t>(d.arc_index(d.arc_at(s)));

  // hist[a][loops]: number of states with a A-smoothings and that many loops.
  std::vector<std::vector<std::uint64_t>> hist(c + 1, std::vector<std::uint64_t>(arcs + 2, 0));
  const std::uint64_t states = std::uint64_t{1} << c;
  UnionFind uf(arcs);
  for (std::uint64_t mask = 0; mask < states; ++mask) {
    std::iota(uf.parent.begin(), uf.parent.end(), 0u);
    std::size_t loops = arcs;
    std::size_t n_a = 0;
    for (std::size_t x = 0; x < c; ++x) {
      const std::uint32_t* a = &arc_of[4 * x];
      if (mask >> x & 1) {
        loops -= uf.unite(a[0], a[3]);
        loops -= uf.unite(a[1], a[2]);
      } else {
        ++n_a;
        loops -= uf.unite(a[0], a[1]);
        loops -= uf.unite(a[2], a[3]);
      }
    }
    ++hist[n_a][loops];
  }

  const LaurentPolynomial loop_value{{2, -1}, {-2, -1}};
  std::vector<LaurentPolynomial> loop_pow{LaurentPolynomial(1)};
  LaurentPolynomial out;
  const std::size_t extra = d.free_loops();
  for (std::size_t n_a = 0; n_a <= c; ++n_a)
    for (std::size_t loops = 0; loops < hist[n_a].size(); ++loops) {
      if (hist[n_a][loops] == 0) continue;
      const std::size_t total = loops + extra;
      while (loop_pow.size() < total) loop_pow.push_back(loop_pow.back() * loop_value);
      const int exponent = static_cast<int>(2 * n_a) - static_cast<int>(c);
      out += LaurentPolynomial::monomial(exponent, static_cast<std::int64_t>(hist[n_a][loops])) *
             loop_pow[total - 1];
    }
  return out;
}

LaurentPolynomial jones(const diagram::PlanarDiagram& d) {
  // V = (-A^3)^-w <D> with A = q^(-1/2).
  const int w = d.writhe();
  LaurentPolynomial v = kauffman_bracket(d).shifted(-3 * w);
  if (w % 2 != 0) v = -v;
  return v.inverted().divide_exponents(2);
}

LaurentPolynomial jones_unnormalized(const diagram::PlanarDiagram& d) {
  // (q + q^-1) V evaluated at t^(1/2) = -q.
  const LaurentPolynomial normalized = jones(d);
  LaurentPolynomial v;
  for (const auto& [e, c] : normalized.terms()) v += LaurentPolynomial::monomial(e, e % 2 == 0 ? c : -c);
  return LaurentPolynomial{{1, 1}, {-1, 1}} * v;
}

std::string jones_to_string(const LaurentPolynomial& v) {
  for (const auto& [e, coeff] : v.terms())
    if (e % 2 != 0) return v.to_string("q");
  return v.divide_exponents(2).to_string("t");
}

}  // namespace symknot::polynomials
