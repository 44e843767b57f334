#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symknot/diagram/faces.hpp"
#include "symknot/diagram/planar_diagram.hpp"

namespace symknot::diagram {

/// Boundary arcs of a disk meeting the diagram in two strands. A T_0 site
/// (no crossings inside) has nw == ne and sw == se, since an uncrossed strand
/// is a single PD arc. A twist region of n != 0 crossings has four distinct
/// labels: the chain runs west to east, its first crossing touching nw/sw and
/// its last touching ne/se.
struct TangleSite {
  int nw = 0;
  int ne = 0;
  int sw = 0;
  int se = 0;

  bool is_trivial() const { return nw == ne && sw == se; }
  std::string to_string() const;
  friend bool operator==(const TangleSite&, const TangleSite&) = default;
};

/// An integer number of half twists, or the vertical tangle T_inf.
class TwistParameter {
 public:
  TwistParameter(int n) : n_(n) {}  // NOLINT(google-explicit-constructor)
  static TwistParameter infinity() {
    TwistParameter t(0);
    t.infinite_ = true;
    return t;
  }
  bool is_infinite() const { return infinite_; }
  int value() const;  // throws Error(InfiniteTwist) for infinity

 private:
  int n_ = 0;
  bool infinite_ = false;
};

enum class Side { Left, Right };

/// Where J is cut open: the band meets `band_arc`, the twist region sits on
/// `twist_arc`, both on the face lying on `side` of `band_arc` (relative to
/// its orientation).
struct SymmetricUnionSite {
  int band_arc = 0;
  int twist_arc = 0;
  Side side = Side::Left;
  friend bool operator==(const SymmetricUnionSite&, const SymmetricUnionSite&) = default;
};

struct SymmetricUnion {
  PlanarDiagram diagram;
  TangleSite twist_site;
  int n = 0;
  /// Region between the two band strands; used as the exterior when
  /// checkerboard colouring.
  ArcSide exterior{0, true};
};

struct Pretzel {
  PlanarDiagram diagram;
  /// One site per column; its chain runs top to bottom (nw/sw are the top
  /// arcs, ne/se the bottom ones), so fusion_resolution caps the column.
  std::vector<TangleSite> columns;
};

/// Standard diagram of the pretzel link P(a_1, ..., a_k): vertical columns
/// of a_i half twists (all a_i nonzero) joined side by side.
Pretzel pretzel(const std::vector<int>& twists);

/// Switches every crossing. Like every operation here, the result carries
/// canonical labels, so mirror(mirror(d)) == relabel(d).
PlanarDiagram mirror(const PlanarDiagram& d);
/// Reflection of the plane: keeps over/under data, reverses cyclic order.
/// Represents the same knot type as mirror().
PlanarDiagram planar_reflection(const PlanarDiagram& d);
/// Reverses the orientation of every component.
PlanarDiagram reverse(const PlanarDiagram& d);
/// Canonical relabelling: arcs numbered consecutively along components.
PlanarDiagram relabel(const PlanarDiagram& d);

/// Band sum of two knots along arcs a1 of d1 and a2 of d2, respecting
/// orientations.
PlanarDiagram connected_sum(const PlanarDiagram& d1, const PlanarDiagram& d2, int a1, int a2);

/// Replaces the T_0 site by |n| horizontal half twists (positive crossings
/// for n > 0). When both strands bound two common regions the region on the
/// left of `nw` is used.
PlanarDiagram twist_insert(const PlanarDiagram& d, const TangleSite& site, TwistParameter n);

/// Same, also reporting the inserted twist region.
SymmetricUnion twist_insert_with_site(const PlanarDiagram& d, const TangleSite& site, TwistParameter n);

/// Builds J # m(J) with the reflected copy across a vertical axis, joined by
/// a band at `site.band_arc`, and n half twists on the axis at
/// `site.twist_arc`. Crossings of J come first, then those of its mirror
/// image, then the twist region.
SymmetricUnion symmetric_union(const PlanarDiagram& j, const SymmetricUnionSite& site, int n);

/// Replaces a twist region by T_inf (nw joined to sw, ne to se).
PlanarDiagram fusion_resolution(const PlanarDiagram& d, const TangleSite& site);

/// Smoothing of crossing c: which = 0 is the A (Khovanov 0-) smoothing
/// joining positions 0-1 and 2-3, which = 1 the B smoothing joining 0-3 and
/// 1-2. Components left without crossings become free loops.
PlanarDiagram resolve_crossing(const PlanarDiagram& d, std::size_t c, int which);

/// The smoothing of crossing c that respects orientation (0 for positive
/// crossings, 1 for negative).
inline int oriented_smoothing(const PlanarDiagram& d, std::size_t c) { return d.sign(c) > 0 ? 0 : 1; }

}  // namespace symknot::diagram
