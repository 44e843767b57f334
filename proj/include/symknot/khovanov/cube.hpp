#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "symknot/diagram/planar_diagram.hpp"

namespace symknot::khovanov {

/// Crossing limits for full homology computations.
struct Budget {
  std::size_t rational = 16;
  std::size_t f2 = 20;
};

/// Default budget, with both limits replaced by SYMKNOT_BUDGET when that
/// environment variable holds a positive integer.
Budget default_budget();

/// Edge of the cube: vertex v with bit i clear to v | (1 << i).
struct CubeEdge {
  bool merge = false;
  /// Merge: circles a, b of the source become circle `joined` of the
  /// target. Split: circle a of the source becomes circles c1 (through
  /// position 0 of the crossing) and c2 (through position 1).
  std::uint8_t a = 0, b = 0, joined = 0, c1 = 0, c2 = 0;
  /// Target circle of every uninvolved source circle.
  std::array<std::uint8_t, 64> image{};
};

/// All 2^c smoothings. Bit i of a vertex is the smoothing of crossing i:
/// 0 joins positions 0-1 and 2-3, 1 joins 0-3 and 1-2. Vertices are
/// enumerated in increasing binary order (crossing 0 is the lowest bit).
class ResolutionCube {
 public:
  /// Throws BudgetError when the diagram has more than `max_crossings`.
  ResolutionCube(const diagram::PlanarDiagram& d, std::size_t max_crossings);

  std::size_t crossings() const noexcept { return c_; }
  std::size_t vertex_count() const noexcept { return std::size_t{1} << c_; }
  std::size_t n_plus() const noexcept { return n_plus_; }
  std::size_t n_minus() const noexcept { return n_minus_; }
  /// Circles at a vertex, free loops included.
  std::size_t circles(std::uint64_t v) const { return circles_[v]; }
  /// Circle id of arc `a` at vertex v.
  std::uint8_t circle_of(std::uint64_t v, std::size_t a) const { return circle_of_[v * arcs_ + a]; }
  CubeEdge edge(std::uint64_t v, std::size_t i) const;

 private:
  std::size_t c_ = 0;
  std::size_t arcs_ = 0;
  std::size_t loops_ = 0;
  std::size_t n_plus_ = 0;
  std::size_t n_minus_ = 0;
  std::vector<std::array<std::uint32_t, 4>> crossing_arcs_;
  std::vector<std::uint8_t> circles_;
  std::vector<std::uint8_t> circle_of_;
};

inline ResolutionCube build_cube(const diagram::PlanarDiagram& d, std::size_t max_crossings = 20) {
  return ResolutionCube(d, max_crossings);
}

}  // namespace symknot::khovanov
