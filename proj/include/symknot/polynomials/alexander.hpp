#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symknot/algebra/bigint.hpp"
#include "symknot/algebra/laurent.hpp"
#include "symknot/diagram/planar_diagram.hpp"

namespace symknot::polynomials {

using algebra::LaurentPolynomial;

struct Letter {
  std::size_t generator;
  int exponent;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Wirtinger presentation with one generator per over-arc (maximal strand
/// between two undercrossings) and one relator per crossing, of the form
/// x_o^s x_i x_o^-s x_j^-1 where s is the crossing sign, x_i the incoming
/// and x_j the outgoing under-arc.
struct WirtingerPresentation {
  std::size_t generators = 0;
  std::vector<std::vector<Letter>> relators;
  /// Over-arc of every PD arc (by dense arc index).
  std::vector<std::size_t> arc_generator;

  std::string to_string() const;
};

WirtingerPresentation wirtinger(const diagram::PlanarDiagram& d);

/// Fox Jacobian evaluated at the abelianization x_k -> t; rows of negative
/// crossings are multiplied by t so every entry is a polynomial.
std::vector<std::vector<LaurentPolynomial>> alexander_matrix(const WirtingerPresentation& w,
                                                              const diagram::PlanarDiagram& d);

/// Alexander polynomial of a knot, normalized so that Delta(t) = Delta(1/t)
/// and Delta(1) = 1. Throws Error(Domain) for links.
LaurentPolynomial alexander(const diagram::PlanarDiagram& d);

/// |Delta(-1)|.
algebra::BigInt determinant_alexander(const diagram::PlanarDiagram& d);

}  // namespace symknot::polynomials
