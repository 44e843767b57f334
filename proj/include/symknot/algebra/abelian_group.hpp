#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "symknot/algebra/bigint.hpp"
#include "symknot/algebra/integer_matrix.hpp"

namespace symknot::algebra {

/// Finitely generated abelian group Z^free_rank + Z/d_1 + ... + Z/d_k in
/// invariant-factor form (each d_i > 1, d_i | d_{i+1}). Two groups are
/// isomorphic iff the values compare equal.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  /// Accepts any list of nonnegative integers; units are dropped, zeros become
  /// free summands and the rest is brought into divisibility order.
  static AbelianGroup from_cyclic_orders(const std::vector<BigInt>& orders, std::size_t extra_free_rank = 0);

  const std::vector<BigInt>& invariant_factors() const noexcept { return factors_; }
  std::size_t free_rank() const noexcept { return free_rank_; }
  bool is_trivial() const noexcept { return factors_.empty() && free_rank_ == 0; }
  bool is_finite() const noexcept { return free_rank_ == 0; }

  /// Order of a finite group; throws Error(Domain) if free_rank > 0.
  BigInt order() const;

  /// Prime-power cyclic summands (p, p^k), sorted.
  std::vector<std::pair<BigInt, BigInt>> primary_decomposition() const;

  /// e.g. "Z/7 + Z/7", "Z^2 + Z/3", "0".
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<BigInt> factors_;
  std::size_t free_rank_ = 0;
};

/// Group presented by M: Z^cols modulo the row space of M.
AbelianGroup cokernel(const IntegerMatrix& m);

/// True iff every cyclic summand of the primary decomposition has
/// square-free order (equivalently the largest invariant factor is
/// square-free). Throws Error(Domain) when free_rank > 0.
bool is_square_free_decomposition(const AbelianGroup& g);

/// Trial-division factorisation, (prime, exponent) pairs in increasing order.
std::vector<std::pair<BigInt, unsigned>> factor_integer(BigInt n);

bool is_square_free(const BigInt& n);

}  // namespace symknot::algebra
