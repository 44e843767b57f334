#include "symknot/diagram/faces.hpp"

#include "symknot/diagram/planar_map.hpp"
#include "symknot/errors.hpp"

namespace symknot::diagram {

std::vector<Face> faces(const PlanarDiagram& d) {
  if (!d.is_connected()) throw Error(ErrorCode::DisconnectedDiagram, "faces: diagram is not connected");
  if (d.crossing_count() == 0) {
    const int loop = d.loop_labels().front();
    return {Face{{ArcSide{loop, true}}, {}}, Face{{ArcSide{loop, false}}, {}}};
  }
  std::vector<Face> out;
  for (const auto& mf : map_faces(PlanarMap::from_diagram(d))) {
    Face f;
    f.corners = mf.corners;
    for (Slot s : mf.corners) f.sides.push_back({d.arc_at(s), d.departs_at(s)});
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace symknot::diagram
