#include "symknot/cli/report.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "symknot/diagram/fixtures.hpp"
#include "symknot/diagram/surgery.hpp"
#include "symknot/errors.hpp"
#include "symknot/goeritz/goeritz.hpp"
#include "symknot/polynomials/alexander.hpp"
#include "symknot/polynomials/jones.hpp"

namespace symknot::cli {

namespace {

std::string big(const algebra::BigInt& v) { return v.str(); }

class Stopwatch {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

Json error_json(const Error& e) { return Json{{"error", to_string(e.code())}, {"message", e.what()}}; }

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedSyntax:
    case ErrorCode::ArcMultiplicity:
    case ErrorCode::InconsistentOrientation:
    case ErrorCode::UnknownFixture:
      return kExitParse;
    case ErrorCode::BudgetExceeded:
      return kExitBudget;
    case ErrorCode::InconsistentSystem:
      return kExitCheckFailed;
    default:
      return kExitInvalid;
  }
}

diagram::PlanarDiagram build_symmetric_union(const std::string& j, int n) {
  diagram::fixture(j);  // unknown names raise UnknownFixture
  if (j != diagram::kn_template().partial_knot)
    throw Error(ErrorCode::Domain, "no symmetric-union template for " + j);
  return diagram::build_kn(n).diagram;
}

ResolvedInput resolve_input(const InputSpec& spec) {
  const int given = (spec.pd ? 1 : 0) + (spec.knot ? 1 : 0) + (spec.symun ? 1 : 0);
  if (given != 1) throw Error(ErrorCode::Domain, "exactly one of --pd, --knot, --symun is required");
  if (spec.knot) return {*spec.knot, diagram::fixture(*spec.knot)};
  if (spec.symun) {
    if (!spec.n) throw Error(ErrorCode::Domain, "--symun needs --n");
    return {"K_" + std::to_string(*spec.n) + "(" + *spec.symun + ")", build_symmetric_union(*spec.symun, *spec.n)};
  }
  std::string text = *spec.pd;
  std::ifstream file(text);
  if (file) {
    std::ostringstream buf;
    buf << file.rdbuf();
    return {text, diagram::parse_pd(buf.str())};
  }
  return {"pd", diagram::parse_pd(text)};
}

Json to_json(const algebra::LaurentPolynomial& p, const std::string& var) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e, c}));
  return Json{{"variable", var}, {"terms", terms}, {"text", p.to_string(var)}};
}

algebra::LaurentPolynomial laurent_from_json(const Json& j) {
  algebra::LaurentPolynomial::Terms terms;
  for (const auto& t : j.at("terms")) terms[t.at(0).get<int>()] += t.at(1).get<std::int64_t>();
  return algebra::LaurentPolynomial(terms);
}

Json to_json(const algebra::BigradedDims& dims) {
  Json table = Json::array();
  for (const auto& [g, r] : dims.entries()) table.push_back(Json{{"q", g.q}, {"u", g.u}, {"rank", r}});
  return table;
}

algebra::BigradedDims bigraded_from_json(const Json& j) {
  algebra::BigradedDims dims;
  for (const auto& e : j) dims.add(e.at("q").get<int>(), e.at("u").get<int>(), e.at("rank").get<std::uint64_t>());
  return dims;
}

Json to_json(const algebra::AbelianGroup& g) {
  Json factors = Json::array();
  for (const auto& f : g.invariant_factors()) factors.push_back(big(f));
  return Json{{"invariant_factors", factors}, {"free_rank", g.free_rank()}, {"text", g.to_string()}};
}

std::string emit(const Json& j) { return j.dump(2) + "\n"; }

Json strip_timings(Json j) {
  if (j.is_object()) {
    j.erase("timings");
    for (auto& [k, v] : j.items()) v = strip_timings(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_timings(v);
  }
  return j;
}

InvariantReport invariant_report(const ResolvedInput& input, const ReportOptions& opts) {
  const diagram::PlanarDiagram& d = input.diagram;
  InvariantReport rep;
  Json& out = rep.body;
  Json timings = Json::object();
  Stopwatch clock;
  auto check = [&](const std::string& name, bool ok) {
    out["checks"].push_back(Json{{"name", name}, {"passed", ok}});
    if (!ok) rep.failures.push_back(name);
  };
  out["schema"] = kReportSchema;
  out["checks"] = Json::array();
  out["diagram"] = Json{{"id", input.id},
                        {"pd", diagram::to_pd_string(d)},
                        {"crossings", d.crossing_count()},
                        {"components", d.components()},
                        {"writhe", d.writhe()}};

  std::optional<algebra::BigInt> det_g;
  std::optional<algebra::AbelianGroup> h1;
  try {
    det_g = goeritz::determinant_goeritz(d);
    h1 = goeritz::h1_branched_cover(d);
    out["h1"] = to_json(*h1);
  } catch (const Error& e) {
    out["h1"] = error_json(e);
    if (e.code() == ErrorCode::InconsistentSystem) rep.failures.push_back("h1_colour_classes");
  }
  timings["goeritz"] = clock.lap();

  std::optional<algebra::BigInt> det_a;
  if (d.is_knot()) {
    try {
      const auto delta = polynomials::alexander(d);
      det_a = polynomials::determinant_alexander(d);
      out["alexander"] = to_json(delta, "t");
    } catch (const Error& e) {
      out["alexander"] = error_json(e);
    }
  } else {
    out["alexander"] = nullptr;
  }
  timings["alexander"] = clock.lap();

  Json det = Json::object();
  det["goeritz"] = det_g ? Json(big(*det_g)) : Json(nullptr);
  det["alexander"] = det_a ? Json(big(*det_a)) : Json(nullptr);
  out["determinant"] = det;
  if (det_g && det_a) check("determinant_channels_agree", *det_g == *det_a);
  if (det_g && h1 && h1->is_finite()) check("h1_order_equals_determinant", h1->order() == *det_g);

  std::optional<algebra::LaurentPolynomial> jones_hat;
  try {
    const auto v = polynomials::jones(d);
    jones_hat = polynomials::jones_unnormalized(d);
    out["jones"] = Json{{"normalized", to_json(v, "q")},
                        {"normalized_text", polynomials::jones_to_string(v)},
                        {"unnormalized", to_json(*jones_hat, "q")}};
  } catch (const Error& e) {
    out["jones"] = error_json(e);
  }
  timings["jones"] = clock.lap();

  out["khovanov"] = Json::object();
  std::optional<khovanov::KhResult> kh_f2;
  auto run_kh = [&](khovanov::Field field, const char* key) -> std::optional<khovanov::KhResult> {
    try {
      auto r = khovanov::kh_homology(d, field, opts.kh);
      const auto thin = khovanov::is_thin(r);
      Json j{{"table", to_json(r.dims)},
             {"poincare", r.dims.poincare_string()},
             {"total_rank", r.dims.total_rank()},
             {"thin", thin.thin},
             {"diagonals", thin.diagonals}};
      if (jones_hat) {
        const bool ok = r.dims.euler_characteristic() == *jones_hat;
        j["euler_equals_jones"] = ok;
        check(std::string("euler_characteristic_") + key, ok);
      }
      out["khovanov"][key] = j;
      timings[std::string("khovanov_") + key] = clock.lap();
      return r;
    } catch (const BudgetError& e) {
      rep.budget_exceeded = true;
      out["khovanov"][key] = error_json(e);
    }
    timings[std::string("khovanov_") + key] = clock.lap();
    return std::nullopt;
  };
  if (opts.field_q) run_kh(khovanov::Field::Rational, "q");
  if (opts.field_f2) kh_f2 = run_kh(khovanov::Field::F2, "f2");
  if (kh_f2 && d.is_knot() && det_g) {
    try {
      const auto reduced = khovanov::reduced_f2_dims(*kh_f2);
      out["khovanov"]["f2"]["reduced"] = to_json(reduced);
      if (khovanov::is_thin(*kh_f2).thin) check("reduced_f2_rank_equals_determinant", reduced.total_rank() == *det_g);
    } catch (const Error& e) {
      out["khovanov"]["f2"]["reduced"] = error_json(e);
    }
  }

  if (d.is_knot() && h1 && det_g && det_a) {
    const auto v = obstruction::ccc_verdict(d, opts.certificate, opts.kh);
    Json ev{{"det_goeritz", big(v.evidence.det_goeritz)},
            {"det_alexander", big(v.evidence.det_alexander)},
            {"determinants_agree", v.evidence.determinants_agree},
            {"diagonals", v.evidence.diagonals},
            {"composite_suspected", v.evidence.composite_suspected},
            {"certificate_reason", v.evidence.certificate_reason}};
    ev["kn"] = v.evidence.kn ? Json(*v.evidence.kn) : Json(nullptr);
    out["verdict"] = Json{{"l_space_certificate", obstruction::to_string(v.l_space_certificate)},
                          {"square_free", v.square_free},
                          {"verdict", obstruction::to_string(v.verdict)},
                          {"certificate_mode", obstruction::to_string(opts.certificate)},
                          {"evidence", ev}};
  } else {
    out["verdict"] = nullptr;
  }
  timings["verdict"] = clock.lap();

  out["status"] = !rep.failures.empty() ? "check_failed" : rep.budget_exceeded ? "partial" : "ok";
  if (opts.timings) out["timings"] = timings;
  return rep;
}

}  // namespace symknot::cli
