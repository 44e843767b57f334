#include "symknot/khovanov/cube.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "symknot/errors.hpp"

namespace symknot::khovanov {

Budget default_budget() {
  Budget b;
  if (const char* env = std::getenv("SYMKNOT_BUDGET")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) b.rational = b.f2 = static_cast<std::size_t>(v);
  }
  return b;
}

ResolutionCube::ResolutionCube(const diagram::PlanarDiagram& d, std::size_t max_crossings)
    : c_(d.crossing_count()),
      arcs_(d.arc_count()),
      loops_(d.free_loops()),
      n_plus_(d.positive_crossings()),
      n_minus_(d.negative_crossings()) {
  if (c_ > max_crossings)
    throw BudgetError("cube of resolutions refused: " + std::to_string(c_) + " crossings exceeds budget " +
                      std::to_string(max_crossings));
  if (arcs_ + loops_ > 64) throw BudgetError("more than 64 circles per smoothing");
  for (std::size_t x = 0; x < c_; ++x) {
    std::array<std::uint32_t, 4> a{};
    for (int p = 0; p < 4; ++p)
      a[p] = static_cast<std::uint32_t>(d.arc_index(d.arc_at(diagram::make_slot(x, p))));
    crossing_arcs_.push_back(a);
  }
  const std::size_t nv = vertex_count();
  circles_.resize(nv);
  circle_of_.resize(nv * arcs_);
  std::vector<std::uint32_t> parent(arcs_);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> id(arcs_);
  for (std::uint64_t v = 0; v < nv; ++v) {
    std::iota(parent.begin(), parent.end(), 0u);
    for (std::size_t x = 0; x < c_; ++x) {
      const auto& a = crossing_arcs_[x];
      if (v >> x & 1) {
        parent[find(a[0])] = find(a[3]);
        parent[find(a[1])] = find(a[2]);
      } else {
        parent[find(a[0])] = find(a[1]);
        parent[find(a[2])] = find(a[3]);
      }
    }
    std::fill(id.begin(), id.end(), -1);
    int next = 0;
    for (std::size_t a = 0; a < arcs_; ++a) {
      const std::uint32_t root = find(static_cast<std::uint32_t>(a));
      if (id[root] < 0) id[root] = next++;
      circle_of_[v * arcs_ + a] = static_cast<std::uint8_t>(id[root]);
    }
    circles_[v] = static_cast<std::uint8_t>(next + static_cast<int>(loops_));
  }
}

CubeEdge ResolutionCube::edge(std::uint64_t v, std::size_t i) const {
  const std::uint64_t w = v | (std::uint64_t{1} << i);
  const auto& a = crossing_arcs_[i];
  const std::uint8_t* src = &circle_of_[v * arcs_];
  const std::uint8_t* dst = &circle_of_[w * arcs_];
  CubeEdge e;
  for (std::size_t k = 0; k < arcs_; ++k) e.image[src[k]] = dst[k];
  const std::size_t src_arc_circles = circles_[v] - loops_;
  const std::size_t dst_arc_circles = circles_[w] - loops_;
  for (std::size_t l = 0; l < loops_; ++l)
    e.image[src_arc_circles + l] = static_cast<std::uint8_t>(dst_arc_circles + l);
  // At bit 0 positions 0-1 share a circle and 2-3 share a circle.
  e.a = src[a[0]];
  e.b = src[a[2]];
  e.merge = e.a != e.b;
  if (e.merge) {
    e.joined = dst[a[0]];
  } else {
    e.c1 = dst[a[0]];
    e.c2 = dst[a[1]];
  }
  return e;
}

}  // namespace symknot::khovanov
