#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "symknot/cli/report.hpp"
#include "symknot/cli/verify.hpp"
#include "symknot/diagram/surgery.hpp"
#include "symknot/goeritz/goeritz.hpp"

using namespace symknot;

namespace {

struct Common {
  cli::InputSpec input;
  std::string field = "both";
  std::size_t jobs = 1;
  std::size_t budget = 0;
  std::string json_out;
  std::uint64_t seed = cli::VerifyOptions{}.seed;
  bool no_timings = false;
  std::string certificate = "auto";
};

void add_input(CLI::App* app, Common& c) {
  app->add_option("--pd", c.input.pd, "PD code, inline or a file path");
  app->add_option("--knot", c.input.knot, "built-in fixture name");
  app->add_option("--symun", c.input.symun, "partial knot of a symmetric union (needs --n)");
  app->add_option("--n", c.input.n, "twist parameter");
}

void add_engine(CLI::App* app, Common& c) {
  app->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
  app->add_option("--budget-crossings", c.budget, "crossing budget for Khovanov homology (0 = default)");
}

void add_output(CLI::App* app, Common& c) {
  app->add_option("--json", c.json_out, "write the JSON report to this file ('-' for stdout)");
  app->add_flag("--no-timings", c.no_timings, "omit timing fields");
}

khovanov::KhOptions kh_options(const Common& c) { return {c.budget, c.jobs}; }

void write_json(const Common& c, const cli::Json& j) {
  if (c.json_out.empty() || c.json_out == "-") {
    std::cout << cli::emit(j);
    return;
  }
  std::ofstream f(c.json_out);
  if (!f) throw Error(ErrorCode::Domain, "cannot write " + c.json_out);
  f << cli::emit(j);
}

khovanov::Field parse_field(const std::string& s) {
  if (s == "q") return khovanov::Field::Rational;
  if (s == "f2") return khovanov::Field::F2;
  throw Error(ErrorCode::Domain, "field must be q or f2");
}

obstruction::Mode parse_mode(const std::string& s) {
  if (s == "compute") return obstruction::Mode::Compute;
  if (s == "formula") return obstruction::Mode::Formula;
  if (s == "auto") return obstruction::Mode::Auto;
  throw Error(ErrorCode::Domain, "certificate must be compute, formula or auto");
}

int cmd_invariants(const Common& c) {
  const auto input = cli::resolve_input(c.input);
  cli::ReportOptions opts;
  opts.field_q = c.field == "both" || c.field == "q";
  opts.field_f2 = c.field == "both" || c.field == "f2";
  if (!opts.field_q && !opts.field_f2) parse_field(c.field);
  opts.kh = kh_options(c);
  opts.certificate = parse_mode(c.certificate);
  opts.timings = !c.no_timings;
  const auto rep = cli::invariant_report(input, opts);
  write_json(c, rep.body);
  for (const auto& f : rep.failures) std::cerr << "check failed: " << f << "\n";
  if (!rep.failures.empty()) return cli::kExitCheckFailed;
  return rep.budget_exceeded ? cli::kExitBudget : cli::kExitOk;
}

int cmd_symun(const std::string& j, int n, const Common& c) {
  const auto d = cli::build_symmetric_union(j, n);
  if (!c.json_out.empty()) {
    write_json(c, cli::Json{{"schema", "symknot.symun/1"}, {"knot", j}, {"n", n}, {"pd", diagram::to_pd_string(d)}});
  } else {
    std::cout << diagram::to_pd_string(d) << "\n";
  }
  return cli::kExitOk;
}

int cmd_kh(const Common& c) {
  const auto input = cli::resolve_input(c.input);
  const auto field = parse_field(c.field == "both" ? "q" : c.field);
  const auto r = khovanov::kh_homology(input.diagram, field, kh_options(c));
  const auto thin = khovanov::is_thin(r);
  if (!c.json_out.empty()) {
    write_json(c, cli::Json{{"schema", "symknot.kh/1"},
                            {"id", input.id},
                            {"field", khovanov::to_string(field)},
                            {"table", cli::to_json(r.dims)},
                            {"thin", thin.thin},
                            {"diagonals", thin.diagonals}});
  } else {
    std::cout << r.dims.poincare_string() << "\n";
    for (const auto& [g, rank] : r.dims.entries()) std::cout << "q=" << g.q << " u=" << g.u << " rank=" << rank << "\n";
    std::cout << (thin.thin ? "thin" : "not thin") << "\n";
  }
  return cli::kExitOk;
}

int cmd_h1(const Common& c, const std::string& n_range) {
  cli::Json rows = cli::Json::array();
  auto one = [&](const std::string& id, const diagram::PlanarDiagram& d) {
    const auto g = goeritz::h1_branched_cover(d);
    auto j = cli::to_json(g);
    j["id"] = id;
    rows.push_back(j);
    if (c.json_out.empty()) std::cout << id << ": " << g.to_string() << "\n";
  };
  if (!n_range.empty()) {
    const auto [lo, hi] = cli::parse_range(n_range);
    const std::string j = c.input.symun.value_or("5_2");
    for (int n = lo; n <= hi; ++n) one("K_" + std::to_string(n) + "(" + j + ")", cli::build_symmetric_union(j, n));
  } else {
    const auto input = cli::resolve_input(c.input);
    one(input.id, input.diagram);
  }
  if (!c.json_out.empty()) write_json(c, cli::Json{{"schema", "symknot.h1/1"}, {"groups", rows}});
  return cli::kExitOk;
}

int cmd_verify(const Common& c, const std::vector<std::string>& only, const std::string& n_range) {
  cli::VerifyOptions opts;
  for (const auto& s : only) opts.only.insert(cli::criterion_id(s));
  if (!n_range.empty()) opts.n_range = cli::parse_range(n_range);
  opts.seed = c.seed;
  opts.kh = kh_options(c);
  const auto results = cli::verify_paper(opts);
  bool all = true;
  for (const auto& r : results) {
    std::cerr << "[" << (r.passed ? "PASS" : "FAIL") << "] " << r.id << " " << r.name;
    if (!c.no_timings) std::cerr << " (" << r.seconds << " s)";
    std::cerr << "\n";
    for (const auto& f : r.failures) std::cerr << "    " << f << "\n";
    all = all && r.passed;
  }
  if (!c.json_out.empty()) write_json(c, cli::to_json(results, !c.no_timings));
  return all ? cli::kExitOk : cli::kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symknot: knot invariants for symmetric unions"};
  app.require_subcommand(1);
  Common c;

  auto* inv = app.add_subcommand("invariants", "full invariant report (JSON)");
  add_input(inv, c);
  add_engine(inv, c);
  add_output(inv, c);
  inv->add_option("--field", c.field, "q, f2 or both")->check(CLI::IsMember({"q", "f2", "both"}));
  inv->add_option("--certificate", c.certificate, "compute, formula or auto")
      ->check(CLI::IsMember({"compute", "formula", "auto"}));

  std::string sym_j;
  int sym_n = 0;
  auto* sym = app.add_subcommand("symun", "PD code of K_n(J)");
  sym->add_option("--knot", sym_j, "partial knot J")->required();
  sym->add_option("--n", sym_n, "twist parameter")->required();
  add_output(sym, c);

  auto* kh = app.add_subcommand("kh", "Khovanov homology table");
  add_input(kh, c);
  add_engine(kh, c);
  add_output(kh, c);
  kh->add_option("--field", c.field, "q or f2")->check(CLI::IsMember({"q", "f2"}));

  std::string h1_range;
  auto* h1 = app.add_subcommand("h1", "first homology of the branched double cover");
  add_input(h1, c);
  add_output(h1, c);
  h1->add_option("--n-range", h1_range, "a..b: tabulate K_n(J) (J from --symun, default 5_2)");

  std::vector<std::string> only;
  std::string v_range;
  auto* ver = app.add_subcommand("verify-paper", "run the acceptance criteria");
  add_engine(ver, c);
  add_output(ver, c);
  ver->add_option("--only", only, "criterion ids or names")->delimiter(',');
  ver->add_option("--n-range", v_range, "a..b: parameter range for the K_n criteria");
  ver->add_option("--seed", c.seed, "seed for randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? cli::kExitOk : cli::kExitParse;
  }

  try {
    if (*inv) return cmd_invariants(c);
    if (*sym) return cmd_symun(sym_j, sym_n, c);
    if (*kh) return cmd_kh(c);
    if (*h1) return cmd_h1(c, h1_range);
    if (*ver) return cmd_verify(c, only, v_range);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return cli::exit_code_for(e.code());
  }
  return cli::kExitInvalid;
}
