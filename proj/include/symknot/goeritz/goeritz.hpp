#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "symknot/algebra/abelian_group.hpp"
#include "symknot/algebra/integer_matrix.hpp"
#include "symknot/diagram/faces.hpp"
#include "symknot/diagram/planar_diagram.hpp"

namespace symknot::goeritz {

enum class ColorClass {
  /// White = the class not containing the exterior region.
  Default,
  /// White = the class containing the exterior region.
  Other,
};

struct CheckerboardColoring {
  std::vector<diagram::Face> faces;
  std::vector<bool> white;             // per face
  std::vector<std::size_t> white_regions;  // X_1, ..., X_m as face indices
  std::size_t exterior = 0;            // face taken as unbounded
};

/// Two-colours the regions of a connected diagram. A PD code carries no
/// embedding, so unless `exterior` names an arc-side of the unbounded region
/// the region with the most sides (lowest index on ties) is used.
CheckerboardColoring checkerboard(const diagram::PlanarDiagram& d, ColorClass cls = ColorClass::Default,
                                  std::optional<diagram::ArcSide> exterior = std::nullopt);

struct GoeritzData {
  algebra::IntegerMatrix g_prime;
  algebra::IntegerMatrix goeritz;
  /// eta(c) per crossing: +1 when the white corners sit between positions
  /// 0-1 and 2-3, -1 otherwise (white swept by rotating the over-strand
  /// counterclockwise).
  std::vector<int> incidences;
};

/// g_ij = -sum of eta(c) over crossings joining white regions i != j;
/// diagonal entries make every row sum zero. G drops the first row and
/// column.
GoeritzData goeritz_matrix(const diagram::PlanarDiagram& d, const CheckerboardColoring& col);

/// |det G|.
algebra::BigInt determinant_goeritz(const diagram::PlanarDiagram& d);

/// coker G for both colour classes; throws Error(InconsistentSystem) if
/// they disagree.
algebra::AbelianGroup h1_branched_cover(const diagram::PlanarDiagram& d);

}  // namespace symknot::goeritz
