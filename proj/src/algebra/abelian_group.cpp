#include "symknot/algebra/abelian_group.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "symknot/algebra/smith.hpp"
#include "symknot/errors.hpp"

namespace symknot::algebra {

std::vector<std::pair<BigInt, unsigned>> factor_integer(BigInt n) {
  std::vector<std::pair<BigInt, unsigned>> out;
  if (n < 0) n = -n;
  if (n < 2) return out;
  for (BigInt p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e != 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1U);
  return out;
}

bool is_square_free(const BigInt& n) {
  for (const auto& [p, e] : factor_integer(n))
    if (e > 1) return false;
  return true;
}

AbelianGroup AbelianGroup::from_cyclic_orders(const std::vector<BigInt>& orders, std::size_t extra_free_rank) {
  AbelianGroup g;
  g.free_rank_ = extra_free_rank;
  // Gather prime powers, then reassemble invariant factors.
  std::map<BigInt, std::vector<unsigned>> by_prime;
  for (const BigInt& raw : orders) {
    if (raw < 0) throw Error(ErrorCode::Domain, "negative cyclic order");
    if (raw == 0) {
      ++g.free_rank_;
      continue;
    }
    for (const auto& [p, e] : factor_integer(raw)) by_prime[p].push_back(e);
  }
  std::size_t len = 0;
  for (auto& [p, exps] : by_prime) {
    std::sort(exps.begin(), exps.end(), std::greater<>());
    len = std::max(len, exps.size());
  }
  // Largest factor collects the largest power of every prime, and so on.
  std::vector<BigInt> factors(len, BigInt(1));
  for (const auto& [p, exps] : by_prime)
    for (std::size_t i = 0; i < exps.size(); ++i) factors[i] *= boost::multiprecision::pow(p, exps[i]);
  std::reverse(factors.begin(), factors.end());
  g.factors_ = std::move(factors);
  return g;
}

BigInt AbelianGroup::order() const {
  if (free_rank_ != 0) throw Error(ErrorCode::Domain, "order of an infinite group");
  BigInt o = 1;
  for (const auto& f : factors_) o *= f;
  return o;
}

std::vector<std::pair<BigInt, BigInt>> AbelianGroup::primary_decomposition() const {
  std::vector<std::pair<BigInt, BigInt>> out;
  for (const auto& f : factors_)
    for (const auto& [p, e] : factor_integer(f)) out.emplace_back(p, boost::multiprecision::pow(p, e));
  std::sort(out.begin(), out.end());
  return out;
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (free_rank_ > 0) {
    out << "Z";
    if (free_rank_ > 1) out << "^" << free_rank_;
    first = false;
  }
  for (const auto& f : factors_) {
    out << (first ? "" : " + ") << "Z/" << f;
    first = false;
  }
  return out.str();
}

AbelianGroup cokernel(const IntegerMatrix& m) {
  const SmithForm snf = smith_normal_form(m);
  std::vector<BigInt> orders;
  std::size_t rank = 0;
  for (const auto& d : snf.diagonal) {
    if (d != 0) {
      ++rank;
      orders.push_back(d);
    }
  }
  return AbelianGroup::from_cyclic_orders(orders, m.cols() - rank);
}

bool is_square_free_decomposition(const AbelianGroup& g) {
  if (g.free_rank() != 0)
    throw Error(ErrorCode::Domain, "group has free part; not the homology of a rational homology sphere");
  for (const auto& [p, q] : g.primary_decomposition())
    if (p != q) return false;
  return true;
}

}  // namespace symknot::algebra
