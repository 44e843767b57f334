#pragma once

#include <vector>

#include "symknot/algebra/integer_matrix.hpp"

namespace symknot::algebra {

/// Smith normal form U * M * V = D with U, V unimodular and D diagonal with
/// nonnegative entries d_1 | d_2 | ... | d_k (k = min(rows, cols)).
struct SmithForm {
  std::vector<BigInt> diagonal;
  IntegerMatrix u;
  IntegerMatrix v;
  IntegerMatrix d;
};

/// Elementary row/column reduction with the minimal-absolute-value pivot.
SmithForm smith_normal_form(const IntegerMatrix& m);

}  // namespace symknot::algebra
