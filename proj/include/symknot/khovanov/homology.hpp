#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symknot/algebra/bigraded.hpp"
#include "symknot/diagram/planar_diagram.hpp"
#include "symknot/khovanov/cube.hpp"
#include "symknot/khovanov/sparse_rank.hpp"

namespace symknot::khovanov {

using algebra::BigradedDims;

struct KhOptions {
  /// Crossing limit; 0 selects default_budget() for the field.
  std::size_t max_crossings = 0;
  /// Worker threads over quantum gradings (results are merged in q order).
  std::size_t jobs = 1;
};

struct KhResult {
  Field field = Field::Rational;
  BigradedDims dims;
  std::size_t crossings = 0;
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t components = 0;
  /// Largest matrix left over after unit-pivot elimination.
  std::size_t max_residual = 0;
};

/// Unreduced Khovanov homology (standard rank-2 Frobenius algebra). A
/// generator at a smoothing with r one-resolutions and labels v+/v- sits in
/// u = r - n_-, q = #v+ - #v- + r + n_+ - 2 n_-. Each q-slice is an
/// independent complex.
KhResult kh_homology(const diagram::PlanarDiagram& d, Field field, const KhOptions& opts = {});

/// Chain complex of one quantum grading: dims[u - u_min] and the matrix of
/// d^u as rows indexed by generators of degree u.
struct SliceComplex {
  int q = 0;
  int u_min = 0;
  std::vector<std::size_t> dims;
  std::vector<std::vector<SparseRow>> differentials;
};

SliceComplex build_slice(const ResolutionCube& cube, int q);
/// Quantum gradings carrying generators, ascending.
std::vector<int> slice_gradings(const ResolutionCube& cube);

/// Composes consecutive differentials over Z in every slice and reports
/// whether all compositions vanish.
bool check_d_squared(const diagram::PlanarDiagram& d, std::size_t max_crossings = 12);

inline const BigradedDims& poincare_polynomial(const KhResult& r) { return r.dims; }

struct ThinnessReport {
  bool thin = false;
  std::vector<int> diagonals;  // occupied values of q - 2u, ascending
};

/// Thin: support on at most two diagonals differing by 2.
ThinnessReport is_thin(const BigradedDims& dims);
inline ThinnessReport is_thin(const KhResult& r) { return is_thin(r.dims); }

/// Closed formula for Kh(K_n; Q): generators at (-1,0) and (1,0) plus two
/// copies of the 24-dimensional block with ranks 1,1,3,3,4,4,3,3,1,1 at
/// (2k, k) offsets, anchored at (2(n-5)-1, n-5) and (2(n-4)+1, n-4). For
/// n < 0 the value at -n is reflected (q,u) -> (-q,-u).
BigradedDims closed_formula_kn(int n);

/// Reduced homology from an unreduced F2 result of a knot, by peeling
/// unreduced(q,u) = reduced(q-1,u) + reduced(q+1,u) from the lowest q.
/// Throws Error(InconsistentSystem) if no nonnegative solution exists.
BigradedDims reduced_f2_dims(const KhResult& r);

/// Check of the unoriented skein exact sequence at crossing c:
///   Kh(X) -> q Kh(s) -> q^(2+3e) u^(1+e) Kh(h) -> (u)
/// where s is the oriented and h the unoriented smoothing and
/// e = n_-(h) - n_-(X). The sequence is stated for a positive crossing;
/// a negative crossing is handled on the mirror diagram.
struct SkeinReport {
  bool used_mirror = false;
  int epsilon = 0;
  BigradedDims original;
  BigradedDims oriented;    // shifted
  BigradedDims unoriented;  // shifted
  bool rank_inequality = false;
  bool euler_additivity = false;
  bool passed() const { return rank_inequality && euler_additivity; }
};

SkeinReport skein_consistency(const diagram::PlanarDiagram& d, std::size_t c, Field field = Field::Rational,
                              const KhOptions& opts = {});

}  // namespace symknot::khovanov
