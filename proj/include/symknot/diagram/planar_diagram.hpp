#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace symknot::diagram {

/// One crossing in PD notation: arc labels in counterclockwise order starting
/// with the incoming under-strand. Positions 0 and 2 carry the under-strand,
/// positions 1 and 3 the over-strand.
struct Crossing {
  std::array<int, 4> arcs{};
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// A crossing position: 4 * crossing + position.
using Slot = std::uint32_t;

inline constexpr Slot make_slot(std::size_t crossing, int pos) { return static_cast<Slot>(4 * crossing + pos); }
inline constexpr std::size_t slot_crossing(Slot s) { return s / 4; }
inline constexpr int slot_pos(Slot s) { return static_cast<int>(s % 4); }

/// Validated, oriented link diagram.
///
/// Invariants: every arc label occurs exactly twice among the crossings, the
/// under-strand runs position 0 -> 2, and the over-strand direction of each
/// crossing is the unique one making every arc run from one crossing to the
/// next. Crossingless unknotted components are kept as `free_loops`.
class PlanarDiagram {
 public:
  PlanarDiagram() = default;

  /// Validates and orients. Throws ParseError (ArcMultiplicity,
  /// InconsistentOrientation) on bad input.
  static PlanarDiagram from_crossings(std::vector<Crossing> crossings, std::vector<int> loop_labels = {});

  static PlanarDiagram unknot();

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  std::size_t crossing_count() const noexcept { return crossings_.size(); }
  /// Number of arcs between crossings (free loops are not arcs).
  std::size_t arc_count() const noexcept { return labels_.size(); }
  std::size_t free_loops() const noexcept { return loop_labels_.size(); }
  const std::vector<int>& loop_labels() const noexcept { return loop_labels_; }
  std::size_t components() const noexcept { return components_; }
  bool is_knot() const noexcept { return components_ == 1; }

  /// True when the over-strand runs from position 3 to position 1; such a
  /// crossing is positive.
  bool over_forward(std::size_t c) const { return over_forward_[c]; }
  int sign(std::size_t c) const { return over_forward_[c] ? 1 : -1; }
  int writhe() const;
  std::size_t positive_crossings() const;
  std::size_t negative_crossings() const;

  /// Sorted distinct arc labels.
  const std::vector<int>& arc_labels() const noexcept { return labels_; }
  /// Dense index of an arc label; throws IndexOutOfRange if absent.
  std::size_t arc_index(int label) const;
  int arc_at(Slot s) const { return crossings_[slot_crossing(s)].arcs[slot_pos(s)]; }
  /// The other end of the arc at `s`.
  Slot partner(Slot s) const { return partner_[s]; }
  /// Slot where the arc departs (tail) / arrives (head).
  Slot arc_tail(std::size_t arc_idx) const { return tail_[arc_idx]; }
  Slot arc_head(std::size_t arc_idx) const { return head_[arc_idx]; }
  /// Whether the arc at `s` leaves its crossing at s.
  bool departs_at(Slot s) const;
  /// Component index of each arc (dense index).
  std::size_t arc_component(std::size_t arc_idx) const { return arc_component_[arc_idx]; }

  /// Crossing graph connected and no free loops beside a lone unknot.
  bool is_connected() const;

  friend bool operator==(const PlanarDiagram& a, const PlanarDiagram& b) {
    return a.crossings_ == b.crossings_ && a.loop_labels_ == b.loop_labels_;
  }

 private:
  std::vector<Crossing> crossings_;
  std::vector<int> loop_labels_;
  std::vector<int> labels_;
  std::vector<bool> over_forward_;
  std::vector<Slot> partner_;
  std::vector<Slot> tail_;
  std::vector<Slot> head_;
  std::vector<std::size_t> arc_component_;
  std::size_t components_ = 0;
};

/// Parses `X[a,b,c,d]` terms (and `Loop[k]` for crossingless components),
/// separated by whitespace and/or commas, with `#` line comments. Also
/// accepts a surrounding `PD[...]`.
PlanarDiagram parse_pd(std::string_view text);

/// Canonical text: terms separated by single spaces, e.g.
/// "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]". parse_pd(to_pd_string(d)) == d.
std::string to_pd_string(const PlanarDiagram& d);

}  // namespace symknot::diagram
