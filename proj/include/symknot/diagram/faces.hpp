#pragma once

#include <vector>

#include "symknot/diagram/planar_diagram.hpp"

namespace symknot::diagram {

/// One side of an arc: `left` relative to the arc's orientation.
struct ArcSide {
  int arc;
  bool left;
  friend bool operator==(const ArcSide&, const ArcSide&) = default;
};

/// A complementary region. `sides[i]` is traversed starting at crossing
/// slot `corners[i]` (bounded regions counterclockwise). A crossingless
/// unknot has two regions with a single side each and no corners.
struct Face {
  std::vector<ArcSide> sides;
  std::vector<Slot> corners;
};

/// Regions of a connected diagram. Throws Error(DisconnectedDiagram) for
/// split diagrams.
std::vector<Face> faces(const PlanarDiagram& d);

}  // namespace symknot::diagram
