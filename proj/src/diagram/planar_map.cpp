#include "symknot/diagram/planar_map.hpp"

#include <algorithm>
#include <stdexcept>

#include "symknot/errors.hpp"

namespace symknot::diagram {

PlanarMap PlanarMap::from_diagram(const PlanarDiagram& d) {
  PlanarMap m;
  for (std::size_t c = 0; c < d.crossing_count(); ++c) m.add_crossing(true, d.over_forward(c));
  for (Slot s = 0; s < 4 * d.crossing_count(); ++s) m.partner_[s] = d.partner(s);
  m.free_loops_ = d.free_loops();
  return m;
}

std::size_t PlanarMap::add_crossing(bool under_forward, bool over_forward) {
  const std::size_t c = under_forward_.size();
  under_forward_.push_back(under_forward);
  over_forward_.push_back(over_forward);
  partner_.insert(partner_.end(), 4, kNone);
  return c;
}

void PlanarMap::link(Slot a, Slot b) {
  partner_.at(a) = b;
  partner_.at(b) = a;
}

std::size_t PlanarMap::append(const PlanarMap& other) {
  const std::size_t offset = crossing_count();
  const Slot shift = static_cast<Slot>(4 * offset);
  for (Slot p : other.partner_) partner_.push_back(p == kNone ? kNone : p + shift);
  under_forward_.insert(under_forward_.end(), other.under_forward_.begin(), other.under_forward_.end());
  over_forward_.insert(over_forward_.end(), other.over_forward_.begin(), other.over_forward_.end());
  free_loops_ += other.free_loops_;
  return offset;
}

void PlanarMap::bypass(Slot a, Slot b) {
  const Slot pa = partner_[a];
  const Slot pb = partner_[b];
  partner_[a] = kNone;
  partner_[b] = kNone;
  if (pa == b) {
    ++free_loops_;
    return;
  }
  link(pa, pb);
}

void PlanarMap::remove_crossings(std::vector<std::size_t> doomed) {
  std::sort(doomed.begin(), doomed.end());
  doomed.erase(std::unique(doomed.begin(), doomed.end()), doomed.end());
  const std::size_t n = crossing_count();
  std::vector<std::size_t> new_index(n, static_cast<std::size_t>(-1));
  std::size_t next = 0;
  for (std::size_t c = 0; c < n; ++c)
    if (!std::binary_search(doomed.begin(), doomed.end(), c)) new_index[c] = next++;

  std::vector<Slot> partner(4 * next, kNone);
  std::vector<bool> uf(next), of(next);
  for (std::size_t c = 0; c < n; ++c) {
    if (new_index[c] == static_cast<std::size_t>(-1)) continue;
    uf[new_index[c]] = under_forward_[c];
    of[new_index[c]] = over_forward_[c];
    for (int p = 0; p < 4; ++p) {
      const Slot t = partner_[make_slot(c, p)];
      if (t == kNone || new_index[slot_crossing(t)] == static_cast<std::size_t>(-1))
        throw std::logic_error("remove_crossings: surviving slot attached to a removed crossing");
      partner[make_slot(new_index[c], p)] = make_slot(new_index[slot_crossing(t)], slot_pos(t));
    }
  }
  partner_ = std::move(partner);
  under_forward_ = std::move(uf);
  over_forward_ = std::move(of);
}

void PlanarMap::switch_all() {
  // Old slot k becomes slot k+1: the over-strand moves to positions 0/2.
  const std::size_t n = crossing_count();
  auto moved = [](Slot s) { return make_slot(slot_crossing(s), (slot_pos(s) + 1) % 4); };
  std::vector<Slot> partner(partner_.size(), kNone);
  for (Slot s = 0; s < partner_.size(); ++s)
    if (partner_[s] != kNone) partner[moved(s)] = moved(partner_[s]);
  partner_ = std::move(partner);
  for (std::size_t c = 0; c < n; ++c) {
    const bool uf = under_forward_[c];
    under_forward_[c] = over_forward_[c];
    over_forward_[c] = !uf;
  }
}

void PlanarMap::reflect() {
  const std::size_t n = crossing_count();
  auto moved = [](Slot s) { return make_slot(slot_crossing(s), (4 - slot_pos(s)) % 4); };
  std::vector<Slot> partner(partner_.size(), kNone);
  for (Slot s = 0; s < partner_.size(); ++s)
    if (partner_[s] != kNone) partner[moved(s)] = moved(partner_[s]);
  partner_ = std::move(partner);
  for (std::size_t c = 0; c < n; ++c) over_forward_[c] = !over_forward_[c];
}

void PlanarMap::reverse() {
  for (std::size_t c = 0; c < crossing_count(); ++c) {
    under_forward_[c] = !under_forward_[c];
    over_forward_[c] = !over_forward_[c];
  }
}

PlanarDiagram PlanarMap::to_diagram(std::vector<int>* slot_labels) const {
  const std::size_t n = crossing_count();
  const std::size_t n_slots = 4 * n;
  for (Slot s = 0; s < n_slots; ++s)
    if (partner_[s] == kNone) throw std::logic_error("to_diagram: unlinked slot");

  std::vector<int> label(n_slots, 0);
  std::vector<int> under_entry(n, -1);
  int next_label = 1;
  std::vector<std::pair<Slot, Slot>> arcs;
  for (Slot s = 0; s < n_slots; ++s) {
    if (label[s] != 0) continue;
    const std::size_t c = slot_crossing(s);
    const bool under = slot_pos(s) % 2 == 0;
    const int entry = under ? (under_forward_[c] ? 0 : 2) : (over_forward_[c] ? 3 : 1);
    const Slot exit = make_slot(c, (entry + 2) % 4);
    arcs.clear();
    Slot cur = exit;
    do {
      const Slot h = partner_[cur];
      arcs.emplace_back(cur, h);
      if (slot_pos(h) % 2 == 0) under_entry[slot_crossing(h)] = slot_pos(h);
      cur = make_slot(slot_crossing(h), (slot_pos(h) + 2) % 4);
    } while (cur != exit);
    const int m = static_cast<int>(arcs.size());
    for (int k = 0; k < m; ++k) {
      const int lab = k == m - 1 ? next_label : next_label + 1 + k;
      label[arcs[k].first] = lab;
      label[arcs[k].second] = lab;
    }
    next_label += m;
  }

  std::vector<Crossing> crossings(n);
  for (std::size_t c = 0; c < n; ++c) {
    const int u = under_entry[c];
    for (int i = 0; i < 4; ++i) crossings[c].arcs[i] = label[make_slot(c, (u + i) % 4)];
  }
  std::vector<int> loops;
  for (std::size_t k = 0; k < free_loops_; ++k) loops.push_back(next_label++);
  if (slot_labels) *slot_labels = label;
  return PlanarDiagram::from_crossings(std::move(crossings), std::move(loops));
}

std::vector<MapFace> map_faces(const PlanarMap& m) {
  const std::size_t n_slots = 4 * m.crossing_count();
  std::vector<bool> seen(n_slots, false);
  std::vector<MapFace> faces;
  for (Slot start = 0; start < n_slots; ++start) {
    if (seen[start]) continue;
    MapFace f;
    Slot cur = start;
    do {
      seen[cur] = true;
      f.corners.push_back(cur);
      const Slot t = m.partner(cur);
      cur = make_slot(slot_crossing(t), (slot_pos(t) + 3) % 4);
    } while (cur != start);
    faces.push_back(std::move(f));
  }
  return faces;
}

}  // namespace symknot::diagram
