#pragma once

#include <cstddef>
#include <string>

#include "symknot/algebra/laurent.hpp"
#include "symknot/diagram/planar_diagram.hpp"

namespace symknot::polynomials {

using algebra::LaurentPolynomial;

/// State sums are refused above this many crossings.
inline constexpr std::size_t kBracketCrossingLimit = 24;

/// Kauffman bracket in A with loop value -A^2 - A^-2, normalized so the
/// crossingless unknot is 1. Throws BudgetError above the crossing limit.
LaurentPolynomial kauffman_bracket(const diagram::PlanarDiagram& d);

/// Normalized Jones polynomial V written in q with t = q^2 (so knots only
/// have even powers of q). Unknot -> 1.
LaurentPolynomial jones(const diagram::PlanarDiagram& d);

/// Unnormalized Jones (q + q^-1) V with t^(1/2) = -q, the graded Euler
/// characteristic of Khovanov homology. Unknot -> q + q^-1.
LaurentPolynomial jones_unnormalized(const diagram::PlanarDiagram& d);

/// Renders a polynomial in q as one in t = q^2 when all exponents are even.
std::string jones_to_string(const LaurentPolynomial& v_in_q);

}  // namespace symknot::polynomials
