#include "symknot/goeritz/goeritz.hpp"

#include <deque>
#include <map>

#include "symknot/errors.hpp"

namespace symknot::goeritz {

using algebra::BigInt;
using algebra::IntegerMatrix;
using diagram::make_slot;
using diagram::Slot;

CheckerboardColoring checkerboard(const diagram::PlanarDiagram& d, ColorClass cls,
                                  std::optional<diagram::ArcSide> exterior) {
  CheckerboardColoring out;
  out.faces = diagram::faces(d);
  const std::size_t nf = out.faces.size();

  // Faces on the two sides of each arc get opposite colours.
  std::map<std::pair<int, bool>, std::size_t> side_face;
  for (std::size_t f = 0; f < nf; ++f)
    for (const auto& side : out.faces[f].sides) side_face[{side.arc, side.left}] = f;
  std::vector<std::vector<std::size_t>> adj(nf);
  for (const auto& [key, f] : side_face) {
    if (!key.second) continue;
    const std::size_t g = side_face.at({key.first, false});
    adj[f].push_back(g);
    adj[g].push_back(f);
  }
  if (exterior) {
    auto it = side_face.find({exterior->arc, exterior->left});
    if (it == side_face.end()) throw Error(ErrorCode::IndexOutOfRange, "exterior arc-side not in diagram");
    out.exterior = it->second;
  } else {
    for (std::size_t f = 1; f < nf; ++f)
      if (out.faces[f].sides.size() > out.faces[out.exterior].sides.size()) out.exterior = f;
  }

  std::vector<int> color(nf, -1);
  color[out.exterior] = 0;
  std::deque<std::size_t> queue{out.exterior};
  while (!queue.empty()) {
    const std::size_t f = queue.front();
    queue.pop_front();
    for (std::size_t g : adj[f]) {
      if (color[g] < 0) {
        color[g] = 1 - color[f];
        queue.push_back(g);
      } else if (color[g] == color[f]) {
        throw Error(ErrorCode::InconsistentSystem, "regions are not two-colourable");
      }
    }
  }
  const int white_color = cls == ColorClass::Default ? 1 : 0;
  out.white.resize(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    out.white[f] = color[f] == white_color;
    if (out.white[f]) out.white_regions.push_back(f);
  }
  return out;
}

GoeritzData goeritz_matrix(const diagram::PlanarDiagram& d, const CheckerboardColoring& col) {
  const std::size_t c = d.crossing_count();
  std::vector<std::size_t> corner_face(4 * c);
  for (std::size_t f = 0; f < col.faces.size(); ++f)
    for (Slot s : col.faces[f].corners) corner_face[s] = f;
  std::vector<std::size_t> region_of(col.faces.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < col.white_regions.size(); ++i) region_of[col.white_regions[i]] = i;

  const std::size_t m = col.white_regions.size();
  GoeritzData out;
  out.g_prime = IntegerMatrix(m, m);
  out.incidences.assign(c, 0);
  for (std::size_t x = 0; x < c; ++x) {
    const bool even_white = col.white[corner_face[make_slot(x, 0)]];
    const int eta = even_white ? 1 : -1;
    const int first = even_white ? 0 : 1;
    const std::size_t ri = region_of[corner_face[make_slot(x, first)]];
    const std::size_t rj = region_of[corner_face[make_slot(x, first + 2)]];
    out.incidences[x] = eta;
    if (ri == rj) continue;
    out.g_prime(ri, rj) -= eta;
    out.g_prime(rj, ri) -= eta;
  }
  for (std::size_t i = 0; i < m; ++i) {
    BigInt sum = 0;
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) sum += out.g_prime(i, j);
    out.g_prime(i, i) = -sum;
  }
  out.goeritz = m == 0 ? IntegerMatrix() : out.g_prime.without_row(0).without_col(0);
  return out;
}

algebra::BigInt determinant_goeritz(const diagram::PlanarDiagram& d) {
  return abs(algebra::determinant(goeritz_matrix(d, checkerboard(d)).goeritz));
}

algebra::AbelianGroup h1_branched_cover(const diagram::PlanarDiagram& d) {
  const auto a = algebra::cokernel(goeritz_matrix(d, checkerboard(d, ColorClass::Default)).goeritz);
  const auto b = algebra::cokernel(goeritz_matrix(d, checkerboard(d, ColorClass::Other)).goeritz);
  if (!(a == b))
    throw Error(ErrorCode::InconsistentSystem, "colour classes disagree: " + a.to_string() + " vs " + b.to_string());
  return a;
}

}  // namespace symknot::goeritz
