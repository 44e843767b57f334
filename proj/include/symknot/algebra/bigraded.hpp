#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "symknot/algebra/laurent.hpp"

namespace symknot::algebra {

/// Bigrading (q, u): quantum grading q, homological grading u.
struct Bigrading {
  int q = 0;
  int u = 0;
  friend auto operator<=>(const Bigrading&, const Bigrading&) = default;
};

/// Finitely supported map (q, u) -> positive rank.
class BigradedDims {
 public:
  using Entries = std::map<Bigrading, std::uint64_t>;

  BigradedDims() = default;
  BigradedDims(std::initializer_list<std::pair<const Bigrading, std::uint64_t>> entries);

  const Entries& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  std::uint64_t at(int q, int u) const;
  void add(int q, int u, std::uint64_t rank);
  /// Requires the stored rank to be at least `rank`.
  void subtract(int q, int u, std::uint64_t rank);

  std::uint64_t total_rank() const;

  BigradedDims shifted(int dq, int du) const;
  /// (q, u) -> (-q, -u)
  BigradedDims reflected() const;

  BigradedDims& operator+=(const BigradedDims& other);
  friend BigradedDims operator+(BigradedDims a, const BigradedDims& b) { return a += b; }
  friend bool operator==(const BigradedDims&, const BigradedDims&) = default;

  /// sum (-1)^u rank(q,u) q^q
  LaurentPolynomial euler_characteristic() const;

  /// Diagonals delta = q - 2u carrying nonzero rank.
  std::set<int> diagonals() const;

  /// Poincare polynomial rendering, e.g. "q + q^3 + q^3u + 2q^5u^2".
  std::string poincare_string() const;

 private:
  Entries entries_;
};

}  // namespace symknot::algebra
