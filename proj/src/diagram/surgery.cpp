#include "symknot/diagram/surgery.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "symknot/diagram/planar_map.hpp"
#include "symknot/errors.hpp"

namespace symknot::diagram {

std::string TangleSite::to_string() const {
  std::ostringstream out;
  out << "NW=" << nw << " NE=" << ne << " SW=" << sw << " SE=" << se;
  return out.str();
}

int TwistParameter::value() const {
  if (infinite_) throw Error(ErrorCode::InfiniteTwist, "T_inf is not a twist; use fusion_resolution");
  return n_;
}

namespace {

struct TwistEnds {
  Slot nw, ne, sw, se;
};

struct Chain {
  std::size_t first = 0;
  std::size_t count = 0;
  bool right_handed = true;
};

// Directions NW, SW, SE, NE are counterclockwise. The right-handed layout
// puts the NW-SE strand under.
Slot chain_slot(std::size_t c, int role, bool right_handed) {
  return make_slot(c, right_handed ? role : (role + 3) % 4);
}
constexpr int kNW = 0, kSW = 1, kSE = 2, kNE = 3;

Chain insert_chain(PlanarMap& m, const TwistEnds& e, int n, bool right_handed) {
  Chain chain{m.crossing_count(), static_cast<std::size_t>(n < 0 ? -n : n), right_handed};
  if (n == 0) {
    m.link(e.nw, e.ne);
    m.link(e.sw, e.se);
    return chain;
  }
  for (std::size_t t = 0; t < chain.count; ++t) m.add_crossing();
  const std::size_t first = chain.first;
  const std::size_t last = first + chain.count - 1;
  m.link(e.nw, chain_slot(first, kNW, right_handed));
  m.link(e.sw, chain_slot(first, kSW, right_handed));
  for (std::size_t c = first; c < last; ++c) {
    m.link(chain_slot(c, kNE, right_handed), chain_slot(c + 1, kNW, right_handed));
    m.link(chain_slot(c, kSE, right_handed), chain_slot(c + 1, kSW, right_handed));
  }
  m.link(e.ne, chain_slot(last, kNE, right_handed));
  m.link(e.se, chain_slot(last, kSE, right_handed));
  return chain;
}

// Inserts n twists so that they carry the sign of n, and reports the site.
// `exterior` is a corner slot of the base map naming the exterior region.
SymmetricUnion finish_with_twists(const PlanarMap& base, const TwistEnds& e, int n, Slot exterior) {
  for (bool right_handed : {n > 0, n <= 0}) {
    PlanarMap m = base;
    const Chain chain = insert_chain(m, e, n, right_handed);
    std::vector<int> labels;
    PlanarDiagram d = m.to_diagram(&labels);
    SymmetricUnion out{std::move(d), {}, n, {labels[exterior], false}};
    out.exterior.left = out.diagram.departs_at(exterior);
    if (n == 0) {
      out.twist_site = {labels[e.nw], labels[e.nw], labels[e.sw], labels[e.sw]};
      return out;
    }
    const std::size_t last = chain.first + chain.count - 1;
    out.twist_site = {labels[chain_slot(chain.first, kNW, right_handed)],
                      labels[chain_slot(last, kNE, right_handed)],
                      labels[chain_slot(chain.first, kSW, right_handed)],
                      labels[chain_slot(last, kSE, right_handed)]};
    const int want = n > 0 ? 1 : -1;
    bool ok = true;
    for (std::size_t c = chain.first; c <= last; ++c) ok = ok && out.diagram.sign(c) == want;
    if (ok) return out;
  }
  throw std::logic_error("twist region crossings do not share a sign");
}

std::optional<std::size_t> face_of(const std::vector<MapFace>& fs, Slot corner) {
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (std::find(fs[i].corners.begin(), fs[i].corners.end(), corner) != fs[i].corners.end()) return i;
  return std::nullopt;
}

// The unique corner of face f that runs along `arc`, or throws.
Slot corner_on(const MapFace& f, const PlanarDiagram& d, int arc) {
  std::optional<Slot> found;
  for (Slot s : f.corners) {
    if (d.arc_at(s) != arc) continue;
    if (found) throw Error(ErrorCode::InvalidSite, "arc " + std::to_string(arc) + " bounds the region twice");
    found = s;
  }
  if (!found) throw Error(ErrorCode::InvalidSite, "arc " + std::to_string(arc) + " not on the region");
  return *found;
}

bool face_has_arc(const MapFace& f, const PlanarDiagram& d, int arc) {
  return std::any_of(f.corners.begin(), f.corners.end(), [&](Slot s) { return d.arc_at(s) == arc; });
}

}  // namespace

PlanarDiagram mirror(const PlanarDiagram& d) {
  PlanarMap m = PlanarMap::from_diagram(d);
  m.switch_all();
  return m.to_diagram();
}

PlanarDiagram planar_reflection(const PlanarDiagram& d) {
  PlanarMap m = PlanarMap::from_diagram(d);
  m.reflect();
  return m.to_diagram();
}

PlanarDiagram reverse(const PlanarDiagram& d) {
  PlanarMap m = PlanarMap::from_diagram(d);
  m.reverse();
  return m.to_diagram();
}

PlanarDiagram relabel(const PlanarDiagram& d) { return PlanarMap::from_diagram(d).to_diagram(); }

PlanarDiagram connected_sum(const PlanarDiagram& d1, const PlanarDiagram& d2, int a1, int a2) {
  if (!d1.is_knot() || !d2.is_knot()) throw Error(ErrorCode::Domain, "connected_sum needs two knots");
  if (d1.crossing_count() == 0) {
    if (d1.loop_labels().front() != a1) throw Error(ErrorCode::IndexOutOfRange, "no arc " + std::to_string(a1));
    if (d2.crossing_count() > 0) (void)d2.arc_index(a2);
    return relabel(d2);
  }
  if (d2.crossing_count() == 0) {
    if (d2.loop_labels().front() != a2) throw Error(ErrorCode::IndexOutOfRange, "no arc " + std::to_string(a2));
    (void)d1.arc_index(a1);
    return relabel(d1);
  }
  const std::size_t i1 = d1.arc_index(a1);
  const std::size_t i2 = d2.arc_index(a2);
  PlanarMap m = PlanarMap::from_diagram(d1);
  const Slot shift = static_cast<Slot>(4 * m.append(PlanarMap::from_diagram(d2)));
  m.link(d1.arc_tail(i1), d2.arc_head(i2) + shift);
  m.link(d2.arc_tail(i2) + shift, d1.arc_head(i1));
  return m.to_diagram();
}

SymmetricUnion twist_insert_with_site(const PlanarDiagram& d, const TangleSite& site, TwistParameter n) {
  const int twists = n.value();
  if (!site.is_trivial()) throw Error(ErrorCode::InvalidSite, "twist_insert needs a T_0 site: " + site.to_string());
  const int upper = site.nw;
  const int lower = site.sw;
  if (upper == lower) throw Error(ErrorCode::InvalidSite, "T_0 site needs two different arcs");
  const std::size_t iu = d.arc_index(upper);
  (void)d.arc_index(lower);

  const PlanarMap base = PlanarMap::from_diagram(d);
  const auto fs = map_faces(base);
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (face_has_arc(fs[i], d, upper) && face_has_arc(fs[i], d, lower)) candidates.push_back(i);
  if (candidates.empty()) throw Error(ErrorCode::InvalidSite, "arcs do not share a region: " + site.to_string());
  std::size_t fi = candidates.front();
  if (candidates.size() > 1) fi = *face_of(fs, d.arc_tail(iu));
  if (std::find(candidates.begin(), candidates.end(), fi) == candidates.end())
    throw Error(ErrorCode::InvalidSite, "ambiguous site: " + site.to_string());

  const Slot pu = corner_on(fs[fi], d, upper);
  const Slot pl = corner_on(fs[fi], d, lower);
  const TwistEnds ends{base.partner(pu), pu, pl, base.partner(pl)};
  return finish_with_twists(base, ends, twists, base.partner(pu));
}

PlanarDiagram twist_insert(const PlanarDiagram& d, const TangleSite& site, TwistParameter n) {
  return twist_insert_with_site(d, site, n).diagram;
}

SymmetricUnion symmetric_union(const PlanarDiagram& j, const SymmetricUnionSite& site, int n) {
  if (!j.is_knot() || j.crossing_count() == 0)
    throw Error(ErrorCode::InvalidSite, "symmetric_union needs a knot diagram with crossings");
  if (site.band_arc == site.twist_arc) throw Error(ErrorCode::InvalidSite, "band and twist arcs coincide");
  const std::size_t ia = j.arc_index(site.band_arc);
  (void)j.arc_index(site.twist_arc);

  PlanarMap m = PlanarMap::from_diagram(j);
  const auto fs = map_faces(m);
  const Slot start = site.side == Side::Left ? j.arc_tail(ia) : j.arc_head(ia);
  const MapFace& face = fs[*face_of(fs, start)];
  const Slot pa = corner_on(face, j, site.band_arc);
  const Slot pb = corner_on(face, j, site.twist_arc);
  const Slot qa = m.partner(pa);
  const Slot qb = m.partner(pb);

  PlanarMap reflected = m;
  reflected.reflect();
  const std::size_t offset = m.append(reflected);
  auto refl = [&](Slot s) { return make_slot(slot_crossing(s) + offset, (4 - slot_pos(s)) % 4); };

  m.link(pa, refl(pa));
  m.link(qa, refl(qa));
  const TwistEnds ends{qb, pb, refl(qb), refl(pb)};
  return finish_with_twists(m, ends, n, refl(pa));
}

PlanarDiagram fusion_resolution(const PlanarDiagram& d, const TangleSite& site) {
  const std::vector<int> labels{site.nw, site.ne, site.sw, site.se};
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t k = i + 1; k < labels.size(); ++k)
      if (labels[i] == labels[k])
        throw Error(ErrorCode::NotATwistRegion, "site has no twist region: " + site.to_string());
  const std::size_t inw = d.arc_index(site.nw);
  const std::size_t isw = d.arc_index(site.sw);
  (void)d.arc_index(site.ne);
  (void)d.arc_index(site.se);

  auto adjacent = [](Slot a, Slot b) {
    return slot_crossing(a) == slot_crossing(b) && (slot_pos(a) - slot_pos(b) + 4) % 2 == 1;
  };
  std::optional<std::pair<Slot, Slot>> entry;
  for (Slot s : {d.arc_tail(inw), d.arc_head(inw)})
    for (Slot t : {d.arc_tail(isw), d.arc_head(isw)})
      if (adjacent(s, t) && !entry) entry = {s, t};
  if (!entry) throw Error(ErrorCode::NotATwistRegion, "nw and sw do not meet at a crossing: " + site.to_string());

  auto [s, t] = *entry;
  const Slot o_nw = d.partner(s);
  const Slot o_sw = d.partner(t);
  std::vector<std::size_t> chain;
  Slot o_ne = 0, o_se = 0;
  while (true) {
    const std::size_t c = slot_crossing(s);
    if (std::find(chain.begin(), chain.end(), c) != chain.end() || chain.size() > d.crossing_count())
      throw Error(ErrorCode::NotATwistRegion, "twist region does not terminate: " + site.to_string());
    chain.push_back(c);
    const Slot s2 = make_slot(c, (slot_pos(s) + 2) % 4);
    const Slot t2 = make_slot(c, (slot_pos(t) + 2) % 4);
    const int a = d.arc_at(s2), b = d.arc_at(t2);
    if ((a == site.ne && b == site.se) || (a == site.se && b == site.ne)) {
      o_ne = d.partner(a == site.ne ? s2 : t2);
      o_se = d.partner(a == site.ne ? t2 : s2);
      break;
    }
    s = d.partner(s2);
    t = d.partner(t2);
    if (!adjacent(s, t))
      throw Error(ErrorCode::NotATwistRegion, "strands leave the twist region: " + site.to_string());
  }
  for (Slot o : {o_nw, o_sw, o_ne, o_se})
    if (std::find(chain.begin(), chain.end(), slot_crossing(o)) != chain.end())
      throw Error(ErrorCode::NotATwistRegion, "twist region closes on itself: " + site.to_string());

  PlanarMap m = PlanarMap::from_diagram(d);
  for (std::size_t c : chain)
    for (int p = 0; p < 4; ++p) m.link(make_slot(c, p), make_slot(c, p));
  m.link(o_nw, o_sw);
  m.link(o_ne, o_se);
  m.remove_crossings(chain);
  return m.to_diagram();
}

Pretzel pretzel(const std::vector<int>& twists) {
  if (twists.empty()) throw Error(ErrorCode::Domain, "pretzel needs at least one column");
  // Column roles counterclockwise: TL, BL, BR, TR.
  constexpr int kTL = 0, kBL = 1, kBR = 2, kTR = 3;
  PlanarMap m;
  struct Column {
    std::size_t first, last;
    bool handed;
  };
  std::vector<Column> cols;
  for (int a : twists) {
    if (a == 0) throw Error(ErrorCode::Domain, "pretzel columns must be nonzero");
    const std::size_t k = static_cast<std::size_t>(a < 0 ? -a : a);
    Column col{m.crossing_count(), m.crossing_count() + k - 1, a > 0};
    for (std::size_t t = 0; t < k; ++t) m.add_crossing();
    for (std::size_t c = col.first; c < col.last; ++c) {
      m.link(chain_slot(c, kBL, col.handed), chain_slot(c + 1, kTL, col.handed));
      m.link(chain_slot(c, kBR, col.handed), chain_slot(c + 1, kTR, col.handed));
    }
    cols.push_back(col);
  }
  for (std::size_t i = 0; i + 1 < cols.size(); ++i) {
    m.link(chain_slot(cols[i].first, kTR, cols[i].handed), chain_slot(cols[i + 1].first, kTL, cols[i + 1].handed));
    m.link(chain_slot(cols[i].last, kBR, cols[i].handed), chain_slot(cols[i + 1].last, kBL, cols[i + 1].handed));
  }
  const Column& l = cols.front();
  const Column& r = cols.back();
  m.link(chain_slot(l.first, kTL, l.handed), chain_slot(r.first, kTR, r.handed));
  m.link(chain_slot(l.last, kBL, l.handed), chain_slot(r.last, kBR, r.handed));

  std::vector<int> labels;
  Pretzel out{m.to_diagram(&labels), {}};
  for (const Column& col : cols)
    out.columns.push_back({labels[chain_slot(col.first, kTL, col.handed)], labels[chain_slot(col.last, kBL, col.handed)],
                           labels[chain_slot(col.first, kTR, col.handed)], labels[chain_slot(col.last, kBR, col.handed)]});
  return out;
}

PlanarDiagram resolve_crossing(const PlanarDiagram& d, std::size_t c, int which) {
  if (c >= d.crossing_count())
    throw Error(ErrorCode::IndexOutOfRange, "crossing index " + std::to_string(c) + " out of range");
  if (which != 0 && which != 1) throw Error(ErrorCode::Domain, "smoothing must be 0 or 1");
  PlanarMap m = PlanarMap::from_diagram(d);
  if (which == 0) {
    m.bypass(make_slot(c, 0), make_slot(c, 1));
    m.bypass(make_slot(c, 2), make_slot(c, 3));
  } else {
    m.bypass(make_slot(c, 0), make_slot(c, 3));
    m.bypass(make_slot(c, 1), make_slot(c, 2));
  }
  m.remove_crossings({c});
  return m.to_diagram();
}

}  // namespace symknot::diagram
