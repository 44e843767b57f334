#include "symknot/cli/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "symknot/algebra/smith.hpp"
#include "symknot/diagram/faces.hpp"
#include "symknot/diagram/fixtures.hpp"
#include "symknot/diagram/surgery.hpp"
#include "symknot/goeritz/goeritz.hpp"
#include "symknot/polynomials/alexander.hpp"
#include "symknot/polynomials/jones.hpp"

namespace symknot::cli {

namespace {

using algebra::BigInt;
using algebra::BigradedDims;
using khovanov::Field;

constexpr double kKh52Seconds = 5;
constexpr double kKhPerKnotSeconds = 120;
constexpr double kH1TotalSeconds = 1;

const char* const kNames[] = {"",
                              "kh_5_2_rational",
                              "kh_kn_closed_formula",
                              "kh_kn_f2_thin",
                              "h1_branched_cover",
                              "determinant_49",
                              "alexander_square",
                              "k1_is_10_22",
                              "ccc_verdict",
                              "skein_twist_crossing",
                              "property_suites"};

/// Poincare polynomial of 5_2 over Q as a (q, u) -> rank table.
BigradedDims kh_5_2() {
  return {{{1, 0}, 1}, {{3, 0}, 1}, {{3, 1}, 1}, {{5, 2}, 1}, {{7, 2}, 1}, {{9, 3}, 1}, {{9, 4}, 1}, {{13, 5}, 1}};
}

algebra::LaurentPolynomial alexander_square() { return {{-2, 4}, {-1, -12}, {0, 17}, {1, -12}, {2, 4}}; }

struct Ctx {
  CriterionResult& r;
  void expect(bool ok, const std::string& what, const std::string& expected, const std::string& got) {
    if (!ok) r.failures.push_back(what + ": expected " + expected + ", got " + got);
  }
};

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<int> range_or(const VerifyOptions& o, std::vector<int> dflt) {
  if (!o.n_range) return dflt;
  std::vector<int> v;
  for (int n = o.n_range->first; n <= o.n_range->second; ++n) v.push_back(n);
  return v;
}

std::vector<int> span(int a, int b) {
  std::vector<int> v;
  for (int n = a; n <= b; ++n) v.push_back(n);
  return v;
}

std::string kn(int n) { return "K_" + std::to_string(n); }

void crit_kh52(const VerifyOptions& o, Ctx c) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = khovanov::kh_homology(diagram::fixture("5_2"), Field::Rational, o.kh);
  const double s = since(t0);
  c.expect(r.dims == kh_5_2(), "Kh(5_2;Q)", kh_5_2().poincare_string(), r.dims.poincare_string());
  c.expect(s < kKh52Seconds, "runtime", "< 5 s", std::to_string(s) + " s");
  c.r.summary = r.dims.poincare_string();
}

void crit_kh_formula(const VerifyOptions& o, Ctx c) {
  for (int n : range_or(o, span(0, 4))) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = khovanov::kh_homology(diagram::build_kn(n).diagram, Field::Rational, o.kh);
    const double s = since(t0);
    const auto f = khovanov::closed_formula_kn(n);
    const auto thin = khovanov::is_thin(r);
    c.expect(r.dims == f, kn(n) + " Kh(Q)", f.poincare_string(), r.dims.poincare_string());
    c.expect(thin.thin, kn(n) + " thin", "two adjacent diagonals", std::to_string(thin.diagonals.size()) + " diagonals");
    c.expect(r.dims.total_rank() == 50, kn(n) + " total rank", "50", std::to_string(r.dims.total_rank()));
    c.expect(s < kKhPerKnotSeconds, kn(n) + " runtime", "< 120 s", std::to_string(s) + " s");
  }
}

void crit_kh_f2(const VerifyOptions& o, Ctx c) {
  for (int n : range_or(o, span(0, 4))) {
    const auto d = diagram::build_kn(n).diagram;
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = khovanov::kh_homology(d, Field::F2, o.kh);
    const bool thin = khovanov::is_thin(r).thin;
    const auto red = khovanov::reduced_f2_dims(r);
    const double s = since(t0);
    const BigInt det = goeritz::determinant_goeritz(d);
    c.expect(thin, kn(n) + " Kh(F2) thin", "thin", "not thin");
    c.expect(red.total_rank() == 49 && det == 49, kn(n) + " reduced rank / det", "49 / 49",
             std::to_string(red.total_rank()) + " / " + det.str());
    c.expect(s < kKhPerKnotSeconds, kn(n) + " runtime", "< 120 s", std::to_string(s) + " s");
  }
}

void crit_h1(const VerifyOptions& o, Ctx c) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto z49 = algebra::AbelianGroup::from_cyclic_orders({49});
  const auto z7z7 = algebra::AbelianGroup::from_cyclic_orders({7, 7});
  for (int n : range_or(o, span(-14, 14))) {
    const auto g = goeritz::h1_branched_cover(diagram::build_kn(n).diagram);
    const auto& want = n % 7 == 0 ? z7z7 : z49;
    c.expect(g == want, kn(n) + " H1", want.to_string(), g.to_string());
  }
  const double s = since(t0);
  if (!o.n_range) c.expect(s < kH1TotalSeconds, "runtime", "< 1 s", std::to_string(s) + " s");
}

void crit_det(const VerifyOptions& o, Ctx c) {
  for (int n : range_or(o, span(-5, 7))) {
    const auto d = diagram::build_kn(n).diagram;
    const BigInt g = goeritz::determinant_goeritz(d);
    const BigInt a = polynomials::determinant_alexander(d);
    c.expect(g == 49 && a == 49, kn(n) + " |det G| / |Delta(-1)|", "49 / 49", g.str() + " / " + a.str());
  }
}

void crit_alexander(const VerifyOptions& o, Ctx c) {
  const auto want = alexander_square();
  for (int n : range_or(o, {0, 2, 4})) {
    if (n % 2 != 0) continue;
    const auto got = polynomials::alexander(diagram::build_kn(n).diagram);
    c.expect(got == want, kn(n) + " Alexander", want.to_string("t"), got.to_string("t"));
  }
}

void crit_k1(const VerifyOptions& o, Ctx c) {
  const auto k1 = diagram::build_kn(1).diagram;
  const auto ref = diagram::fixture("10_22");
  const auto j1 = polynomials::jones(k1);
  const auto j2 = polynomials::jones(ref);
  c.expect(j1 == j2, "Jones", polynomials::jones_to_string(j2), polynomials::jones_to_string(j1));
  const auto h1 = khovanov::kh_homology(k1, Field::Rational, o.kh).dims;
  const auto h2 = khovanov::kh_homology(ref, Field::Rational, o.kh).dims;
  c.expect(h1 == h2, "Kh(Q)", h2.poincare_string(), h1.poincare_string());
}

void crit_ccc(const VerifyOptions& o, Ctx c) {
  std::vector<int> ns = {-28, -21, -14, -7, 1, 2, 3, 4, 5, 6, 7, 14, 21, 28};
  if (o.n_range) ns = range_or(o, {});
  for (int n : ns) {
    const auto mode = std::abs(n) > 4 ? obstruction::Mode::Formula : obstruction::Mode::Compute;
    const auto v = obstruction::ccc_verdict(diagram::build_kn(n).diagram, mode, o.kh);
    const auto want = n % 7 == 0 ? obstruction::Verdict::SatisfiesCcc : obstruction::Verdict::Inconclusive;
    c.expect(v.verdict == want, kn(n) + " verdict", obstruction::to_string(want), obstruction::to_string(v.verdict));
    if (std::abs(n) > 4)
      c.expect(v.l_space_certificate == obstruction::Certificate::FormulaThin, kn(n) + " certificate", "FORMULA_THIN",
               obstruction::to_string(v.l_space_certificate));
  }
}

void crit_skein(const VerifyOptions& o, Ctx c) {
  const auto k2 = diagram::build_kn(2).diagram;
  const std::size_t twist = 2 * diagram::fixture(diagram::kn_template().partial_knot).crossing_count();
  const auto rep = khovanov::skein_consistency(k2, twist, Field::Rational, o.kh);
  const BigradedDims unlink{{{-2, 0}, 1}, {{0, 0}, 2}, {{2, 0}, 1}};
  const auto k1 = khovanov::kh_homology(diagram::build_kn(1).diagram, Field::Rational, o.kh).dims;
  c.expect(rep.epsilon == 0, "epsilon", "0", std::to_string(rep.epsilon));
  c.expect(rep.rank_inequality, "rank inequalities", "hold", "violated");
  c.expect(rep.euler_additivity, "Euler additivity", "exact", "violated");
  const auto s = rep.oriented.shifted(-1, 0);
  const auto h = rep.unoriented.shifted(-2 - 3 * rep.epsilon, -1 - rep.epsilon);
  c.expect(s == unlink, "oriented resolution", unlink.poincare_string(), s.poincare_string());
  c.expect(h == k1, "unoriented resolution", k1.poincare_string(), h.poincare_string());
}

bool snf_ok(const algebra::IntegerMatrix& m) {
  const auto s = algebra::smith_normal_form(m);
  if (s.u * m * s.v != s.d || !s.d.is_diagonal()) return false;
  const BigInt du = algebra::determinant(s.u), dv = algebra::determinant(s.v);
  if ((du != 1 && du != -1) || (dv != 1 && dv != -1)) return false;
  for (std::size_t i = 0; i < s.diagonal.size(); ++i) {
    if (s.diagonal[i] < 0 || s.d(i, i) != s.diagonal[i]) return false;
    if (i + 1 < s.diagonal.size() && s.diagonal[i] != 0 && s.diagonal[i + 1] % s.diagonal[i] != 0) return false;
    if (i + 1 < s.diagonal.size() && s.diagonal[i] == 0 && s.diagonal[i + 1] != 0) return false;
  }
  return true;
}

void crit_props(const VerifyOptions& o, Ctx c) {
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> dim(1, 6), val(-9, 9);
  int bad = 0;
  for (int t = 0; t < 200; ++t) {
    algebra::IntegerMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = val(rng);
    if (!snf_ok(m)) ++bad;
  }
  c.expect(bad == 0, "SNF on 200 random matrices", "0 failures", std::to_string(bad));
  for (const auto& f : diagram::fixtures()) {
    const auto d = diagram::fixture(f.name);
    const auto jh = polynomials::jones_unnormalized(d);
    const auto m = diagram::mirror(d);
    for (Field field : {Field::Rational, Field::F2}) {
      const auto kh = khovanov::kh_homology(d, field, o.kh).dims;
      const auto khm = khovanov::kh_homology(m, field, o.kh).dims;
      const std::string tag = f.name + " " + khovanov::to_string(field);
      c.expect(kh.euler_characteristic() == jh, tag + " chi = unnormalized Jones", jh.to_string("q"),
               kh.euler_characteristic().to_string("q"));
      c.expect(khm == kh.reflected(), tag + " mirror reflection", kh.reflected().poincare_string(),
               khm.poincare_string());
    }
    if (!d.is_connected()) continue;
    const BigInt g = goeritz::determinant_goeritz(d);
    const auto h1 = goeritz::h1_branched_cover(d);
    if (h1.is_finite()) c.expect(h1.order() == g, f.name + " |H1| = det", g.str(), h1.order().str());
    if (d.is_knot()) {
      const BigInt a = polynomials::determinant_alexander(d);
      c.expect(a == g, f.name + " det channels", g.str(), a.str());
    }
  }
}

}  // namespace

int criterion_id(const std::string& s) {
  static const std::vector<std::pair<std::string, int>> aliases = {
      {"kh52", 1}, {"kh", 2}, {"f2", 3}, {"h1", 4}, {"det", 5}, {"alexander", 6},
      {"k1", 7}, {"ccc", 8}, {"skein", 9}, {"props", 10}};
  for (const auto& [k, v] : aliases)
    if (k == s) return v;
  for (int i = 1; i <= 10; ++i)
    if (s == std::to_string(i) || s == kNames[i]) return i;
  throw Error(ErrorCode::Domain, "unknown criterion '" + s + "'");
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) throw std::invalid_argument("no ..");
    std::size_t used_a = 0, used_b = 0;
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    const int lo = std::stoi(a, &used_a), hi = std::stoi(b, &used_b);
    if (used_a != a.size() || used_b != b.size() || lo > hi) throw std::invalid_argument("bad");
    return {lo, hi};
  } catch (const std::exception&) {
    throw Error(ErrorCode::Domain, "range must look like a..b with a <= b, got '" + text + "'");
  }
}

std::vector<CriterionResult> verify_paper(const VerifyOptions& opts) {
  using Fn = void (*)(const VerifyOptions&, Ctx);
  static const Fn table[] = {nullptr,   crit_kh52, crit_kh_formula, crit_kh_f2, crit_h1,  crit_det,
                             crit_alexander, crit_k1,   crit_ccc,        crit_skein, crit_props};
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 10; ++id) {
    if (!opts.only.empty() && !opts.only.count(id)) continue;
    CriterionResult r;
    r.id = id;
    r.name = kNames[id];
    const auto t0 = std::chrono::steady_clock::now();
    try {
      table[id](opts, Ctx{r});
    } catch (const Error& e) {
      r.failures.push_back(std::string("raised ") + to_string(e.code()) + ": " + e.what());
    }
    r.seconds = since(t0);
    r.passed = r.failures.empty();
    out.push_back(std::move(r));
  }
  return out;
}

Json to_json(const std::vector<CriterionResult>& results, bool timings) {
  Json list = Json::array();
  bool all = true;
  for (const auto& r : results) {
    Json j{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"failures", r.failures}, {"summary", r.summary}};
    if (timings) j["timings"] = Json{{"seconds", r.seconds}};
    list.push_back(j);
    all = all && r.passed;
  }
  return Json{{"schema", kVerifySchema}, {"criteria", list}, {"all_passed", all}};
}

}  // namespace symknot::cli
