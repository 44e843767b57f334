#include "symknot/khovanov/homology.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <thread>

#include "symknot/diagram/surgery.hpp"
#include "symknot/errors.hpp"

namespace symknot::khovanov {

namespace {

struct Binomials {
  Binomials() {
    for (int n = 0; n <= 64; ++n) {
      table[n][0] = 1;
      for (int k = 1; k <= n; ++k) table[n][k] = table[n - 1][k - 1] + (k <= n - 1 ? table[n - 1][k] : 0);
    }
  }
  std::uint64_t table[65][65] = {};
};

const Binomials& binomials() {
  static const Binomials b;
  return b;
}

// Position of a k-subset (bit mask) in colexicographic order.
std::uint64_t colex_rank(std::uint64_t mask) {
  const auto& b = binomials().table;
  std::uint64_t rank = 0;
  int i = 1;
  while (mask) {
    const int bit = std::countr_zero(mask);
    rank += b[bit][i];
    ++i;
    mask &= mask - 1;
  }
  return rank;
}

std::uint64_t next_same_popcount(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

struct Grading {
  int n_plus;
  int n_minus;
  // Number of v+ labels at a vertex with r ones and k circles, or -1.
  int plus_count(int q, int r, int k) const {
    const int s = q - r - n_plus + 2 * n_minus;
    if ((k + s) % 2 != 0) return -1;
    const int p = (k + s) / 2;
    return p >= 0 && p <= k ? p : -1;
  }
};

Grading grading_of(const ResolutionCube& cube) {
  return {static_cast<int>(cube.n_plus()), static_cast<int>(cube.n_minus())};
}

}  // namespace

std::vector<int> slice_gradings(const ResolutionCube& cube) {
  const Grading g = grading_of(cube);
  int lo = 0, hi = 0;
  bool any = false;
  for (std::uint64_t v = 0; v < cube.vertex_count(); ++v) {
    const int r = std::popcount(v);
    const int k = static_cast<int>(cube.circles(v));
    const int base = r + g.n_plus - 2 * g.n_minus;
    if (!any || base - k < lo) lo = base - k;
    if (!any || base + k > hi) hi = base + k;
    any = true;
  }
  std::vector<int> out;
  for (int q = lo; q <= hi; q += 2) out.push_back(q);
  return out;
}

SliceComplex build_slice(const ResolutionCube& cube, int q) {
  const Grading g = grading_of(cube);
  const std::size_t c = cube.crossings();
  const std::size_t nv = cube.vertex_count();
  SliceComplex out;
  out.q = q;
  out.u_min = -g.n_minus;
  out.dims.assign(c + 1, 0);
  out.differentials.assign(c, {});

  constexpr std::uint64_t kNone = ~std::uint64_t{0};
  std::vector<std::uint64_t> offset(nv, kNone);
  const auto& binom = binomials().table;
  for (std::uint64_t v = 0; v < nv; ++v) {
    const int r = std::popcount(v);
    const int k = static_cast<int>(cube.circles(v));
    const int p = g.plus_count(q, r, k);
    if (p < 0) continue;
    offset[v] = out.dims[r];
    out.dims[r] += binom[k][p];
  }
  for (std::size_t r = 0; r < c; ++r) out.differentials[r].resize(out.dims[r]);

  for (std::uint64_t v = 0; v < nv; ++v) {
    if (offset[v] == kNone) continue;
    const int r = std::popcount(v);
    if (static_cast<std::size_t>(r) == c) continue;
    const int k = static_cast<int>(cube.circles(v));
    const int p = g.plus_count(q, r, k);
    auto& rows = out.differentials[r];
    for (std::size_t i = 0; i < c; ++i) {
      if (v >> i & 1) continue;
      const std::uint64_t w = v | (std::uint64_t{1} << i);
      const std::int64_t sign = std::popcount(v & ((std::uint64_t{1} << i) - 1)) % 2 ? -1 : 1;
      const CubeEdge e = cube.edge(v, i);
      const std::uint64_t base_w = offset[w];
      std::uint64_t x = p == 0 ? 0 : (std::uint64_t{1} << p) - 1;
      const std::uint64_t count = binom[k][p];
      for (std::uint64_t j = 0; j < count; ++j) {
        if (j > 0) x = next_same_popcount(x);
        std::uint64_t y = 0;
        for (std::uint64_t rest = x; rest; rest &= rest - 1) {
          const int bit = std::countr_zero(rest);
          if (bit == e.a || (e.merge && bit == e.b)) continue;
          y |= std::uint64_t{1} << e.image[bit];
        }
        SparseRow& row = rows[offset[v] + j];
        auto emit = [&](std::uint64_t label) {
          row.push_back({static_cast<std::uint32_t>(base_w + colex_rank(label)), sign});
        };
        const bool xa = x >> e.a & 1;
        if (e.merge) {
          const bool xb = x >> e.b & 1;
          if (xa && xb) emit(y | std::uint64_t{1} << e.joined);
          else if (xa || xb) emit(y);
        } else if (xa) {
          emit(y | std::uint64_t{1} << e.c1);
          emit(y | std::uint64_t{1} << e.c2);
        } else {
          emit(y);
        }
      }
    }
  }
  for (auto& rows : out.differentials)
    for (auto& row : rows)
      std::sort(row.begin(), row.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
  return out;
}

KhResult kh_homology(const diagram::PlanarDiagram& d, Field field, const KhOptions& opts) {
  std::size_t limit = opts.max_crossings;
  if (limit == 0) {
    const Budget b = default_budget();
    limit = field == Field::F2 ? b.f2 : b.rational;
  }
  const ResolutionCube cube(d, limit);
  KhResult result;
  result.field = field;
  result.crossings = cube.crossings();
  result.n_plus = cube.n_plus();
  result.n_minus = cube.n_minus();
  result.components = d.components();

  const std::vector<int> qs = slice_gradings(cube);
  std::vector<std::vector<std::size_t>> homology(qs.size());
  std::vector<std::size_t> residual(qs.size(), 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t s = next++; s < qs.size(); s = next++) {
      try {
        SliceComplex slice = build_slice(cube, qs[s]);
        const std::size_t c = slice.dims.size() - 1;
        std::vector<std::size_t> ranks(c, 0);
        for (std::size_t r = 0; r < c; ++r) {
          if (slice.dims[r] == 0 || slice.dims[r + 1] == 0) continue;
          RankStats stats;
          ranks[r] = sparse_rank(std::move(slice.differentials[r]), slice.dims[r + 1], field, &stats);
          residual[s] = std::max(residual[s], stats.residual_rows);
        }
        std::vector<std::size_t> h(c + 1);
        for (std::size_t r = 0; r <= c; ++r)
          h[r] = slice.dims[r] - (r < c ? ranks[r] : 0) - (r > 0 ? ranks[r - 1] : 0);
        homology[s] = std::move(h);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(opts.jobs, qs.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  const int u_min = -static_cast<int>(cube.n_minus());
  for (std::size_t s = 0; s < qs.size(); ++s) {
    for (std::size_t r = 0; r < homology[s].size(); ++r) result.dims.add(qs[s], u_min + static_cast<int>(r), homology[s][r]);
    result.max_residual = std::max(result.max_residual, residual[s]);
  }
  return result;
}

bool check_d_squared(const diagram::PlanarDiagram& d, std::size_t max_crossings) {
  const ResolutionCube cube(d, max_crossings);
  for (int q : slice_gradings(cube)) {
    const SliceComplex slice = build_slice(cube, q);
    for (std::size_t r = 0; r + 1 < slice.differentials.size(); ++r) {
      const auto& first = slice.differentials[r];
      const auto& second = slice.differentials[r + 1];
      for (const auto& row : first) {
        std::map<std::uint32_t, std::int64_t> acc;
        for (const auto& e : row)
          for (const auto& f : second[e.col]) acc[f.col] += e.val * f.val;
        for (const auto& [col, v] : acc)
          if (v != 0) return false;
      }
    }
  }
  return true;
}

ThinnessReport is_thin(const BigradedDims& dims) {
  ThinnessReport out;
  const auto diag = dims.diagonals();
  out.diagonals.assign(diag.begin(), diag.end());
  out.thin = out.diagonals.size() <= 1 || (out.diagonals.size() == 2 && out.diagonals[1] - out.diagonals[0] == 2);
  return out;
}

BigradedDims closed_formula_kn(int n) {
  static constexpr std::uint64_t kBlock[10] = {1, 1, 3, 3, 4, 4, 3, 3, 1, 1};
  const int m = n < 0 ? -n : n;
  BigradedDims out{{{-1, 0}, 1}, {{1, 0}, 1}};
  for (int k = 0; k < 10; ++k) {
    out.add(2 * (m - 5) - 1 + 2 * k, m - 5 + k, kBlock[k]);
    out.add(2 * (m - 4) + 1 + 2 * k, m - 4 + k, kBlock[k]);
  }
  return n < 0 ? out.reflected() : out;
}

BigradedDims reduced_f2_dims(const KhResult& r) {
  if (r.field != Field::F2) throw Error(ErrorCode::Domain, "reduced peeling needs an F2 result");
  std::map<int, std::map<int, std::uint64_t>> by_u;
  for (const auto& [g, rank] : r.dims.entries()) by_u[g.u][g.q] = rank;
  BigradedDims out;
  for (const auto& [u, column] : by_u) {
    const int lo = column.begin()->first;
    const int hi = column.rbegin()->first;
    std::int64_t below = 0;  // reduced rank at q - 1
    for (int q = lo; q <= hi + 2; q += 2) {
      auto it = column.find(q);
      const std::int64_t unreduced = it == column.end() ? 0 : static_cast<std::int64_t>(it->second);
      const std::int64_t above = unreduced - below;
      if (above < 0 || (q > hi && above != 0))
        throw Error(ErrorCode::InconsistentSystem, "reduced peeling failed at u=" + std::to_string(u));
      if (above > 0) out.add(q + 1, u, static_cast<std::uint64_t>(above));
      below = above;
    }
  }
  return out;
}

SkeinReport skein_consistency(const diagram::PlanarDiagram& d, std::size_t c, Field field, const KhOptions& opts) {
  if (c >= d.crossing_count())
    throw Error(ErrorCode::IndexOutOfRange, "crossing index " + std::to_string(c) + " out of range");
  SkeinReport rep;
  rep.used_mirror = d.sign(c) < 0;
  const diagram::PlanarDiagram x = rep.used_mirror ? diagram::mirror(d) : d;
  const diagram::PlanarDiagram s = diagram::resolve_crossing(x, c, 0);
  const diagram::PlanarDiagram h = diagram::resolve_crossing(x, c, 1);
  rep.epsilon = static_cast<int>(h.negative_crossings()) - static_cast<int>(x.negative_crossings());
  rep.original = kh_homology(x, field, opts).dims;
  rep.oriented = kh_homology(s, field, opts).dims.shifted(1, 0);
  rep.unoriented = kh_homology(h, field, opts).dims.shifted(2 + 3 * rep.epsilon, 1 + rep.epsilon);

  rep.rank_inequality = true;
  for (const auto& [g, rank] : rep.original.entries())
    if (rank > rep.oriented.at(g.q, g.u) + rep.unoriented.at(g.q, g.u)) rep.rank_inequality = false;
  rep.euler_additivity = rep.original.euler_characteristic() ==
                         rep.oriented.euler_characteristic() + rep.unoriented.euler_characteristic();
  return rep;
}

}  // namespace symknot::khovanov
