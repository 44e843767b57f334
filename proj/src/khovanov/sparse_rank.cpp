#include "symknot/khovanov/sparse_rank.hpp"

#include <algorithm>
#include <numeric>

#include "symknot/algebra/checked.hpp"
#include "symknot/algebra/integer_matrix.hpp"

namespace symknot::khovanov {

const char* to_string(Field f) { return f == Field::Rational ? "Q" : "F2"; }

namespace {

std::int64_t find_val(const SparseRow& row, std::uint32_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const SparseEntry& e, std::uint32_t c) { return e.col < c; });
  return it != row.end() && it->col == col ? it->val : 0;
}

// target -= factor * pivot; reports columns newly filled in.
void axpy(SparseRow& target, const SparseRow& pivot, std::int64_t factor, bool f2, SparseRow& scratch,
          std::vector<std::uint32_t>& fill_in) {
  scratch.clear();
  auto a = target.begin();
  auto b = pivot.begin();
  while (a != target.end() || b != pivot.end()) {
    if (b == pivot.end() || (a != target.end() && a->col < b->col)) {
      scratch.push_back(*a++);
    } else if (a == target.end() || b->col < a->col) {
      const std::int64_t v = f2 ? 1 : algebra::checked_mul(-factor, b->val);
      scratch.push_back({b->col, v});
      fill_in.push_back(b->col);
      ++b;
    } else {
      const std::int64_t v =
          f2 ? (a->val ^ b->val) : algebra::checked_sub(a->val, algebra::checked_mul(factor, b->val));
      if (v != 0) scratch.push_back({a->col, v});
      ++a;
      ++b;
    }
  }
  target.swap(scratch);
}

}  // namespace

std::size_t sparse_rank(std::vector<SparseRow> rows, std::size_t ncols, Field field, RankStats* stats) {
  const bool f2 = field == Field::F2;
  if (f2) {
    for (auto& row : rows) {
      std::erase_if(row, [](const SparseEntry& e) { return e.val % 2 == 0; });
      for (auto& e : row) e.val = 1;
    }
  }
  const std::size_t n = rows.size();
  std::vector<std::vector<std::uint32_t>> col_rows(ncols);
  for (std::uint32_t r = 0; r < n; ++r)
    for (const auto& e : rows[r]) col_rows[e.col].push_back(r);

  std::vector<bool> alive(n, true);
  std::size_t rank = 0;
  std::size_t unit_pivots = 0;
  SparseRow scratch;
  std::vector<std::uint32_t> fill_in;
  std::vector<std::uint32_t> order(n);
  std::vector<std::uint32_t> targets;

  bool progress = true;
  while (progress) {
    progress = false;
    order.clear();
    for (std::uint32_t r = 0; r < n; ++r) {
      if (!alive[r]) continue;
      if (rows[r].empty()) {
        alive[r] = false;
        continue;
      }
      order.push_back(r);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t x, std::uint32_t y) { return rows[x].size() < rows[y].size(); });
    for (std::uint32_t r : order) {
      if (!alive[r]) continue;
      if (rows[r].empty()) {
        alive[r] = false;
        continue;
      }
      const SparseEntry* best = nullptr;
      for (const auto& e : rows[r])
        if ((e.val == 1 || e.val == -1) && (!best || col_rows[e.col].size() < col_rows[best->col].size()))
          best = &e;
      if (!best) continue;
      const std::uint32_t c = best->col;
      const std::int64_t pv = best->val;
      targets = col_rows[c];
      for (std::uint32_t t : targets) {
        if (t == r || !alive[t]) continue;
        const std::int64_t a = find_val(rows[t], c);
        if (a == 0) continue;
        fill_in.clear();
        axpy(rows[t], rows[r], f2 ? 1 : a * pv, f2, scratch, fill_in);
        for (std::uint32_t fc : fill_in) col_rows[fc].push_back(t);
      }
      col_rows[c].clear();
      alive[r] = false;
      rows[r].clear();
      rows[r].shrink_to_fit();
      ++rank;
      ++unit_pivots;
      progress = true;
    }
  }

  // Dense remainder.
  std::vector<std::uint32_t> rest;
  std::vector<std::uint32_t> cols;
  for (std::uint32_t r = 0; r < n; ++r)
    if (alive[r] && !rows[r].empty()) {
      rest.push_back(r);
      for (const auto& e : rows[r]) cols.push_back(e.col);
    }
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  if (stats) *stats = {unit_pivots, rest.size(), cols.size()};
  if (!rest.empty()) {
    algebra::IntegerMatrix m(rest.size(), cols.size());
    for (std::size_t i = 0; i < rest.size(); ++i)
      for (const auto& e : rows[rest[i]]) {
        const auto j = static_cast<std::size_t>(std::lower_bound(cols.begin(), cols.end(), e.col) - cols.begin());
        m(i, j) = e.val;
      }
    rank += algebra::rank(m);
  }
  return rank;
}

}  // namespace symknot::khovanov
