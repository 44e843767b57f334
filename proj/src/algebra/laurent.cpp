#include "symknot/algebra/laurent.hpp"

#include <sstream>

#include "symknot/algebra/checked.hpp"
#include "symknot/errors.hpp"

namespace symknot::algebra {

LaurentPolynomial::LaurentPolynomial(std::int64_t constant) {
  if (constant != 0) terms_[0] = constant;
}

LaurentPolynomial::LaurentPolynomial(const Terms& terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPolynomial::LaurentPolynomial(std::initializer_list<std::pair<const int, std::int64_t>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPolynomial LaurentPolynomial::monomial(int exponent, std::int64_t coeff) {
  LaurentPolynomial p;
  p.add_term(exponent, coeff);
  return p;
}

std::int64_t LaurentPolynomial::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPolynomial::min_degree() const {
  if (terms_.empty()) throw Error(ErrorCode::Domain, "degree of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPolynomial::max_degree() const {
  if (terms_.empty()) throw Error(ErrorCode::Domain, "degree of zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPolynomial::add_term(int exponent, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (inserted) return;
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, checked_sub(0, c));
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_[e] = checked_sub(0, c);
  return r;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, checked_mul(ca, cb));
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  *this = *this * other;
  return *this;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned k) const {
  LaurentPolynomial result(1);
  LaurentPolynomial base = *this;
  while (k != 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k != 0) base *= base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::inverted() const { return substitute_power(-1); }

LaurentPolynomial LaurentPolynomial::substitute_power(int k) const {
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) r.add_term(e * k, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::divide_exponents(int k) const {
  if (k == 0) throw Error(ErrorCode::Domain, "exponent divisor is zero");
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) {
    if (e % k != 0) throw Error(ErrorCode::Domain, "exponent not divisible by " + std::to_string(k));
    r.add_term(e / k, c);
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
  return r;
}

LaurentPolynomial LaurentPolynomial::exact_div(const LaurentPolynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::Domain, "division by zero polynomial");
  const int dtop = divisor.max_degree();
  const std::int64_t lead = divisor.coeff(dtop);
  if (lead != 1 && lead != -1) throw Error(ErrorCode::Domain, "divisor must have unit leading coefficient");
  LaurentPolynomial rem = *this;
  LaurentPolynomial quot;
  const int span = divisor.max_degree() - divisor.min_degree();
  while (!rem.is_zero() && rem.max_degree() - rem.min_degree() >= span) {
    const int e = rem.max_degree() - dtop;
    const std::int64_t c = rem.coeff(rem.max_degree()) * lead;
    auto term = monomial(e, c);
    quot += term;
    rem -= term * divisor;
  }
  if (!rem.is_zero()) throw Error(ErrorCode::Domain, "inexact polynomial division");
  return quot;
}

std::string LaurentPolynomial::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [e, c] = *it;
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << var;
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

Rational laurent_eval(const LaurentPolynomial& p, const BigInt& t) {
  if (t == 0) {
    if (!p.is_zero() && p.min_degree() < 0)
      throw Error(ErrorCode::Domain, "evaluation at 0 of a polynomial with negative exponents");
    return Rational(p.coeff(0));
  }
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) {
    BigInt power = boost::multiprecision::pow(t, static_cast<unsigned>(e < 0 ? -e : e));
    if (e >= 0) {
      sum += Rational(BigInt(c) * power);
    } else {
      sum += Rational(BigInt(c)) / Rational(power);
    }
  }
  return sum;
}

}  // namespace symknot::algebra
