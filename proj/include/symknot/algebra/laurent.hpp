#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "symknot/algebra/bigint.hpp"

namespace symknot::algebra {

/// Exact one-variable Laurent polynomial with integer coefficients.
///
/// Coefficients are 64-bit; every arithmetic operation is overflow-checked
/// and throws Error(Overflow) instead of wrapping. Zero coefficients are
/// never stored.
class LaurentPolynomial {
 public:
  using Terms = std::map<int, std::int64_t>;

  LaurentPolynomial() = default;
  LaurentPolynomial(std::int64_t constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPolynomial(const Terms& terms);
  LaurentPolynomial(std::initializer_list<std::pair<const int, std::int64_t>> terms);

  /// c * var^e
  static LaurentPolynomial monomial(int exponent, std::int64_t coeff = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::int64_t coeff(int exponent) const;
  int min_degree() const;  // requires !is_zero()
  int max_degree() const;  // requires !is_zero()

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);
  LaurentPolynomial operator-() const;

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  LaurentPolynomial pow(unsigned k) const;

  /// var -> var^-1. A ring involution.
  LaurentPolynomial inverted() const;
  /// Multiplies every exponent by k (k may be negative).
  LaurentPolynomial substitute_power(int k) const;
  /// Divides every exponent by k; throws Error(Domain) unless all divide.
  LaurentPolynomial divide_exponents(int k) const;
  /// Multiplies by var^k.
  LaurentPolynomial shifted(int k) const;

  /// Exact division by a divisor with a unit (+-1) leading coefficient.
  /// Throws Error(Domain) if the division is not exact.
  LaurentPolynomial exact_div(const LaurentPolynomial& divisor) const;

  /// Renders as e.g. "2t - 3 + 2t^-1" (highest degree first).
  std::string to_string(const std::string& var = "t") const;

 private:
  void add_term(int exponent, std::int64_t coeff);

  Terms terms_;
};

/// Exact evaluation. Throws Error(Domain) when t == 0 and negative exponents
/// are present.
Rational laurent_eval(const LaurentPolynomial& p, const BigInt& t);

}  // namespace symknot::algebra
