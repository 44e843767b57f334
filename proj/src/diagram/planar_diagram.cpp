#include "symknot/diagram/planar_diagram.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "symknot/errors.hpp"

namespace symknot::diagram {

namespace {

struct ParityEdge {
  std::size_t to;
  bool parity;
};

// Over-strand directions are the unknowns; each arc forces one endpoint to be
// a head and the other a tail. Solved as a parity graph with a constant node.
std::vector<bool> solve_over_directions(const std::vector<Crossing>& crossings,
                                        const std::map<int, std::vector<Slot>>& occ) {
  const std::size_t n = crossings.size();
  const std::size_t konst = n;
  std::vector<std::vector<ParityEdge>> adj(n + 1);
  auto add_edge = [&](std::size_t a, std::size_t b, bool parity) {
    adj[a].push_back({b, parity});
    adj[b].push_back({a, parity});
  };
  for (const auto& [label, slots] : occ) {
    const Slot s1 = slots[0], s2 = slots[1];
    const int p1 = slot_pos(s1), p2 = slot_pos(s2);
    const bool under1 = p1 % 2 == 0, under2 = p2 % 2 == 0;
    if (under1 && under2) {
      if (p1 == p2)
        throw ParseError(ErrorCode::InconsistentOrientation,
                         "arc " + std::to_string(label) + " enters (or leaves) two under-strands");
    } else if (under1 || under2) {
      const Slot u = under1 ? s1 : s2;
      const Slot v = under1 ? s2 : s1;
      const bool head_u = slot_pos(u) == 0;
      // head(v) = o xor (pos==1) must equal !head_u
      add_edge(konst, slot_crossing(v), (!head_u) != (slot_pos(v) == 1));
    } else {
      // o1 xor o2 = 1 xor (p1==1) xor (p2==1)
      const bool parity = true != ((p1 == 1) != (p2 == 1));
      const std::size_t c1 = slot_crossing(s1), c2 = slot_crossing(s2);
      if (c1 == c2) {
        if (parity)
          throw ParseError(ErrorCode::InconsistentOrientation,
                           "arc " + std::to_string(label) + " cannot be oriented");
        continue;
      }
      add_edge(c1, c2, parity);
    }
  }
  std::vector<int> value(n + 1, -1);
  auto bfs = [&](std::size_t root, bool root_value) {
    value[root] = root_value;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (const auto& e : adj[x]) {
        const int want = static_cast<int>(static_cast<bool>(value[x]) != e.parity);
        if (value[e.to] < 0) {
          value[e.to] = want;
          queue.push_back(e.to);
        } else if (value[e.to] != want) {
          throw ParseError(ErrorCode::InconsistentOrientation,
                           "orientation does not close up around crossing " + std::to_string(e.to));
        }
      }
    }
  };
  bfs(konst, false);
  for (std::size_t c = 0; c < n; ++c)
    if (value[c] < 0) bfs(c, true);
  std::vector<bool> out(n);
  for (std::size_t c = 0; c < n; ++c) out[c] = value[c] == 1;
  return out;
}

}  // namespace

PlanarDiagram PlanarDiagram::from_crossings(std::vector<Crossing> crossings, std::vector<int> loop_labels) {
  PlanarDiagram d;
  std::map<int, std::vector<Slot>> occ;
  for (std::size_t c = 0; c < crossings.size(); ++c)
    for (int p = 0; p < 4; ++p) {
      const int label = crossings[c].arcs[p];
      if (label <= 0) throw ParseError(ErrorCode::MalformedSyntax, "arc labels must be positive");
      occ[label].push_back(make_slot(c, p));
    }
  for (const auto& [label, slots] : occ)
    if (slots.size() != 2)
      throw ParseError(ErrorCode::ArcMultiplicity, "arc " + std::to_string(label) + " appears " +
                                                       std::to_string(slots.size()) + " times");
  for (int label : loop_labels) {
    if (label <= 0) throw ParseError(ErrorCode::MalformedSyntax, "loop labels must be positive");
    if (occ.count(label))
      throw ParseError(ErrorCode::ArcMultiplicity, "loop label " + std::to_string(label) + " reused");
  }
  {
    auto sorted = loop_labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError(ErrorCode::ArcMultiplicity, "loop label repeated");
  }

  d.over_forward_ = solve_over_directions(crossings, occ);
  d.crossings_ = std::move(crossings);
  d.loop_labels_ = std::move(loop_labels);

  const std::size_t n_slots = 4 * d.crossings_.size();
  d.partner_.assign(n_slots, 0);
  d.labels_.reserve(occ.size());
  d.tail_.reserve(occ.size());
  d.head_.reserve(occ.size());
  for (const auto& [label, slots] : occ) {
    d.labels_.push_back(label);
    d.partner_[slots[0]] = slots[1];
    d.partner_[slots[1]] = slots[0];
    if (d.departs_at(slots[0])) {
      d.tail_.push_back(slots[0]);
      d.head_.push_back(slots[1]);
    } else {
      d.tail_.push_back(slots[1]);
      d.head_.push_back(slots[0]);
    }
  }

  const std::size_t n_arcs = d.labels_.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  d.arc_component_.assign(n_arcs, kUnset);
  std::size_t comp = 0;
  for (std::size_t a = 0; a < n_arcs; ++a) {
    if (d.arc_component_[a] != kUnset) continue;
    std::size_t cur = a;
    while (d.arc_component_[cur] == kUnset) {
      d.arc_component_[cur] = comp;
      const Slot h = d.head_[cur];
      const Slot next_tail = make_slot(slot_crossing(h), (slot_pos(h) + 2) % 4);
      cur = d.arc_index(d.arc_at(next_tail));
    }
    ++comp;
  }
  d.components_ = comp + d.loop_labels_.size();
  return d;
}

PlanarDiagram PlanarDiagram::unknot() { return from_crossings({}, {1}); }

bool PlanarDiagram::departs_at(Slot s) const {
  const int p = slot_pos(s);
  if (p == 0) return false;
  if (p == 2) return true;
  const bool fwd = over_forward_[slot_crossing(s)];
  return p == 1 ? fwd : !fwd;
}

std::size_t PlanarDiagram::arc_index(int label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label)
    throw Error(ErrorCode::IndexOutOfRange, "no arc labelled " + std::to_string(label));
  return static_cast<std::size_t>(it - labels_.begin());
}

int PlanarDiagram::writhe() const {
  return static_cast<int>(positive_crossings()) - static_cast<int>(negative_crossings());
}

std::size_t PlanarDiagram::positive_crossings() const {
  return static_cast<std::size_t>(std::count(over_forward_.begin(), over_forward_.end(), true));
}

std::size_t PlanarDiagram::negative_crossings() const { return crossings_.size() - positive_crossings(); }

bool PlanarDiagram::is_connected() const {
  if (crossings_.empty()) return loop_labels_.size() == 1;
  if (!loop_labels_.empty()) return false;
  std::vector<std::size_t> parent(crossings_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < labels_.size(); ++a)
    parent[find(slot_crossing(tail_[a]))] = find(slot_crossing(head_[a]));
  const std::size_t root = find(0);
  for (std::size_t c = 1; c < crossings_.size(); ++c)
    if (find(c) != root) return false;
  return true;
}

namespace {

class PdLexer {
 public:
  explicit PdLexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      const char ch = text_[pos_];
      if (ch == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == ',') {
        ++pos_;
      } else {
        break;
      }
    }
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool consume(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  void expect(char ch) {
    skip_inline();
    if (pos_ >= text_.size() || text_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }
  int integer() {
    skip_inline();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc()) fail("expected an arc label");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(ErrorCode::MalformedSyntax, msg + " at offset " + std::to_string(pos_));
  }

 private:
  void skip_inline() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PlanarDiagram parse_pd(std::string_view text) {
  PdLexer lex(text);
  std::vector<Crossing> crossings;
  std::vector<int> loops;
  const bool wrapped = lex.consume("PD[");
  while (!lex.at_end()) {
    if (wrapped && lex.consume("]")) {
      if (!lex.at_end()) lex.fail("trailing input after PD[...]");
      return PlanarDiagram::from_crossings(std::move(crossings), std::move(loops));
    }
    if (lex.consume("X[")) {
      Crossing x;
      for (int i = 0; i < 4; ++i) {
        if (i > 0) lex.expect(',');
        x.arcs[i] = lex.integer();
      }
      lex.expect(']');
      crossings.push_back(x);
    } else if (lex.consume("Loop[")) {
      loops.push_back(lex.integer());
      lex.expect(']');
    } else {
      lex.fail("unexpected token");
    }
  }
  if (wrapped) lex.fail("unterminated PD[");
  if (crossings.empty() && loops.empty()) lex.fail("empty diagram");
  return PlanarDiagram::from_crossings(std::move(crossings), std::move(loops));
}

std::string to_pd_string(const PlanarDiagram& d) {
  std::ostringstream out;
  bool first = true;
  for (const auto& x : d.crossings()) {
    if (!first) out << ' ';
    first = false;
    out << "X[" << x.arcs[0] << ',' << x.arcs[1] << ',' << x.arcs[2] << ',' << x.arcs[3] << ']';
  }
  for (int label : d.loop_labels()) {
    if (!first) out << ' ';
    first = false;
    out << "Loop[" << label << ']';
  }
  return out.str();
}

}  // namespace symknot::diagram
