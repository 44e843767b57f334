#include "symknot/algebra/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace symknot::algebra {
namespace {

using boost::multiprecision::abs;

// Position of the nonzero entry of least absolute value in the trailing block
// starting at (t, t).
std::optional<std::pair<std::size_t, std::size_t>> min_pivot(const IntegerMatrix& d, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  BigInt best_abs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      const BigInt& x = d(i, j);
      if (x == 0) continue;
      BigInt ax = abs(x);
      if (!best || ax < best_abs) {
        best = {i, j};
        best_abs = std::move(ax);
        if (best_abs == 1) return best;
      }
    }
  return best;
}

// Floor-free quotient that leaves a remainder strictly smaller than |p|.
BigInt quotient(const BigInt& x, const BigInt& p) { return x / p; }

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
  SmithForm out;
  out.d = m;
  out.u = IntegerMatrix::identity(m.rows());
  out.v = IntegerMatrix::identity(m.cols());
  IntegerMatrix& d = out.d;
  const std::size_t k = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < k; ++t) {
    bool done = false;
    while (!done) {
      auto piv = min_pivot(d, t);
      if (!piv) {
        // Trailing block is zero; remaining diagonal entries are 0.
        for (std::size_t s = t; s < k; ++s) out.diagonal.emplace_back(0);
        return out;
      }
      d.swap_rows(t, piv->first);
      out.u.swap_rows(t, piv->first);
      d.swap_cols(t, piv->second);
      out.v.swap_cols(t, piv->second);

      const BigInt p = d(t, t);
      bool residue = false;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        BigInt q = quotient(d(i, t), p);
        d.add_row_multiple(i, t, -q);
        out.u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) residue = true;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        BigInt q = quotient(d(t, j), p);
        d.add_col_multiple(j, t, -q);
        out.v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) residue = true;
      }
      if (residue) continue;

      // Row and column t are clear; enforce divisibility of the rest.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < d.rows() && !bad_row; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(i, j) % p != 0) {
            bad_row = i;
            break;
          }
      if (bad_row) {
        d.add_row_multiple(t, *bad_row, 1);
        out.u.add_row_multiple(t, *bad_row, 1);
        continue;
      }
      done = true;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      out.u.negate_row(t);
    }
    out.diagonal.push_back(d(t, t));
  }
  return out;
}

}  // namespace symknot::algebra
