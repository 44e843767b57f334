#pragma once

#include <string>
#include <vector>

#include "symknot/diagram/planar_diagram.hpp"
#include "symknot/diagram/surgery.hpp"

namespace symknot::diagram {

struct Fixture {
  std::string name;
  std::string pd;
  std::string note;
};

/// Built-in diagrams. Knot-table entries use the KnotInfo PD codes (same
/// convention as the Knot Atlas).
const std::vector<Fixture>& fixtures();

/// Parsed fixture; throws Error(UnknownFixture).
PlanarDiagram fixture(const std::string& name);

/// The committed K_n template: partial knot J and the band/twist site.
struct KnTemplate {
  std::string partial_knot;  // fixture name
  SymmetricUnionSite site;
};
const KnTemplate& kn_template();

/// K_n = K_n(5_2) built from the committed template.
SymmetricUnion build_kn(int n);

}  // namespace symknot::diagram
