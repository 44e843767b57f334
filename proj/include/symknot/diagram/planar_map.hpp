#pragma once

#include <cstddef>
#include <vector>

#include "symknot/diagram/planar_diagram.hpp"

namespace symknot::diagram {

/// Unlabelled planar 4-valent map used to perform surgeries.
///
/// Each crossing has four slots in counterclockwise order; slots 0/2 carry
/// the under-strand and 1/3 the over-strand. Slots are joined in pairs by
/// edges. Orientation is carried as per-crossing hints that fix the
/// direction of each component when converting back to a PlanarDiagram.
class PlanarMap {
 public:
  static constexpr Slot kNone = static_cast<Slot>(-1);

  PlanarMap() = default;
  static PlanarMap from_diagram(const PlanarDiagram& d);

  std::size_t crossing_count() const noexcept { return under_forward_.size(); }
  std::size_t free_loops() const noexcept { return free_loops_; }
  void add_free_loops(std::size_t k) { free_loops_ += k; }

  /// Appends a crossing with unlinked slots and returns its index.
  /// `under_forward`: under-strand enters at slot 0. `over_forward`:
  /// over-strand enters at slot 3.
  std::size_t add_crossing(bool under_forward = true, bool over_forward = true);
  void link(Slot a, Slot b);
  Slot partner(Slot s) const { return partner_[s]; }

  bool under_forward(std::size_t c) const { return under_forward_[c]; }
  bool over_forward(std::size_t c) const { return over_forward_[c]; }

  /// Appends a copy of `other`; returns the crossing offset.
  std::size_t append(const PlanarMap& other);

  /// Removes the listed crossings. Every slot of a removed crossing must be
  /// linked only to slots of removed crossings or be re-linked by the caller
  /// beforehand via `bypass`.
  void remove_crossings(std::vector<std::size_t> doomed);

  /// Joins partner(a) with partner(b), detaching a and b; used when the
  /// strand through a and b is cut out. When partner(a) == b the pair is a
  /// closed loop and a free loop is recorded instead.
  void bypass(Slot a, Slot b);

  /// Switches every crossing (over <-> under).
  void switch_all();
  /// Planar reflection: reverses the cyclic order at every crossing.
  void reflect();
  /// Reverses every component's orientation.
  void reverse();

  /// Orients each component (from the hint at the lowest slot it passes),
  /// labels arcs consecutively along components, and emits PD tuples.
  /// `slot_labels` (optional) receives the arc label of every slot.
  PlanarDiagram to_diagram(std::vector<int>* slot_labels = nullptr) const;

 private:
  std::vector<Slot> partner_;
  std::vector<bool> under_forward_;
  std::vector<bool> over_forward_;
  std::size_t free_loops_ = 0;
};

/// A corner sits between slot i and slot i+1 (mod 4) of a crossing.
/// Following the edge at slot i to (y, j) leads to corner (y, j+3).
/// The region is on the left of each traversed edge, so bounded regions are
/// traversed counterclockwise.
struct MapFace {
  std::vector<Slot> corners;  // corner identified by its starting slot
};

std::vector<MapFace> map_faces(const PlanarMap& m);

}  // namespace symknot::diagram
