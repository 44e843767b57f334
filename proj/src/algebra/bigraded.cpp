#include "symknot/algebra/bigraded.hpp"

#include <sstream>

#include "symknot/errors.hpp"

namespace symknot::algebra {

BigradedDims::BigradedDims(std::initializer_list<std::pair<const Bigrading, std::uint64_t>> entries) {
  for (const auto& [g, r] : entries) add(g.q, g.u, r);
}

std::uint64_t BigradedDims::at(int q, int u) const {
  auto it = entries_.find({q, u});
  return it == entries_.end() ? 0 : it->second;
}

void BigradedDims::add(int q, int u, std::uint64_t rank) {
  if (rank == 0) return;
  entries_[{q, u}] += rank;
}

void BigradedDims::subtract(int q, int u, std::uint64_t rank) {
  if (rank == 0) return;
  auto it = entries_.find({q, u});
  if (it == entries_.end() || it->second < rank)
    throw Error(ErrorCode::Domain, "bigraded subtraction below zero");
  it->second -= rank;
  if (it->second == 0) entries_.erase(it);
}

std::uint64_t BigradedDims::total_rank() const {
  std::uint64_t total = 0;
  for (const auto& [g, r] : entries_) total += r;
  return total;
}

BigradedDims BigradedDims::shifted(int dq, int du) const {
  BigradedDims out;
  for (const auto& [g, r] : entries_) out.entries_.emplace(Bigrading{g.q + dq, g.u + du}, r);
  return out;
}

BigradedDims BigradedDims::reflected() const {
  BigradedDims out;
  for (const auto& [g, r] : entries_) out.entries_.emplace(Bigrading{-g.q, -g.u}, r);
  return out;
}

BigradedDims& BigradedDims::operator+=(const BigradedDims& other) {
  for (const auto& [g, r] : other.entries_) add(g.q, g.u, r);
  return *this;
}

LaurentPolynomial BigradedDims::euler_characteristic() const {
  LaurentPolynomial chi;
  for (const auto& [g, r] : entries_) {
    const auto c = static_cast<std::int64_t>(r);
    chi += LaurentPolynomial::monomial(g.q, (g.u % 2 == 0) ? c : -c);
  }
  return chi;
}

std::set<int> BigradedDims::diagonals() const {
  std::set<int> out;
  for (const auto& [g, r] : entries_) out.insert(g.q - 2 * g.u);
  return out;
}

std::string BigradedDims::poincare_string() const {
  if (entries_.empty()) return "0";
  // Order by homological grading, then quantum grading.
  std::map<std::pair<int, int>, std::uint64_t> ordered;
  for (const auto& [g, r] : entries_) ordered[{g.u, g.q}] = r;
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, r] : ordered) {
    const auto [u, q] = key;
    if (!first) out << " + ";
    first = false;
    const bool bare = (q == 0 && u == 0);
    if (r != 1 || bare) out << r;
    if (q != 0) {
      out << "q";
      if (q != 1) out << "^" << q;
    }
    if (u != 0) {
      out << "u";
      if (u != 1) out << "^" << u;
    }
  }
  return out.str();
}

}  // namespace symknot::algebra
