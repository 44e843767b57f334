#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sys/wait.h>

#include "symknot/cli/report.hpp"
#include "symknot/cli/verify.hpp"
#include "symknot/diagram/fixtures.hpp"
#include "symknot/diagram/surgery.hpp"

using namespace symknot;
using namespace symknot::cli;

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(SYMKNOT_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

ReportOptions quick() {
  ReportOptions o;
  o.timings = false;
  return o;
}

}  // namespace

TEST_SUITE("cli library") {
  TEST_CASE("JSON reports round-trip byte for byte") {
    for (const auto& f : diagram::fixtures()) {
      ReportOptions o = quick();
      o.timings = true;
      const auto rep = invariant_report(resolve_input(InputSpec{{}, f.name, {}, {}}), o);
      const std::string text = emit(rep.body);
      CHECK(emit(Json::parse(text)) == text);
      CHECK(emit(strip_timings(Json::parse(text))) == emit(strip_timings(rep.body)));
      CHECK_FALSE(strip_timings(rep.body).contains("timings"));
    }
  }

  TEST_CASE("value round-trips") {
    const algebra::BigradedDims d{{{1, 0}, 1}, {{-3, -2}, 4}};
    CHECK(bigraded_from_json(to_json(d)) == d);
    const algebra::LaurentPolynomial p{{-2, 4}, {0, 17}, {3, -1}};
    CHECK(laurent_from_json(to_json(p, "t")) == p);
  }

  TEST_CASE("5_2 report") {
    const auto rep = invariant_report(resolve_input(InputSpec{{}, "5_2", {}, {}}), quick());
    const auto& b = rep.body;
    CHECK(rep.failures.empty());
    CHECK(b["schema"] == kReportSchema);
    CHECK(b["status"] == "ok");
    CHECK(b["determinant"]["goeritz"] == "7");
    CHECK(b["determinant"]["alexander"] == "7");
    CHECK(b["alexander"]["text"] == "2t - 3 + 2t^-1");
    CHECK(b["h1"]["text"] == "Z/7");
    CHECK(b["khovanov"]["q"]["poincare"] == "q + q^3 + q^3u + q^5u^2 + q^7u^2 + q^9u^3 + q^9u^4 + q^13u^5");
    CHECK(b["khovanov"]["q"]["thin"] == true);
    CHECK(b["verdict"]["verdict"] == "SATISFIES_CCC");
  }

  TEST_CASE("links and budgets") {
    const auto hopf = invariant_report(resolve_input(InputSpec{"X[1,4,2,3] X[3,2,4,1]", {}, {}, {}}), quick());
    CHECK(hopf.failures.empty());
    CHECK(hopf.body["h1"]["text"] == "Z/2");
    CHECK(hopf.body["alexander"].is_null());
    CHECK(hopf.body["verdict"].is_null());
    ReportOptions o = quick();
    o.kh.max_crossings = 3;
    const auto partial = invariant_report(resolve_input(InputSpec{{}, "5_2", {}, {}}), o);
    CHECK(partial.budget_exceeded);
    CHECK(partial.body["status"] == "partial");
    CHECK(partial.body["khovanov"]["q"]["error"] == "budget_exceeded");
  }

  TEST_CASE("input resolution") {
    CHECK(resolve_input(InputSpec{{}, {}, "5_2", 3}).diagram.crossing_count() == 13);
    CHECK_THROWS_AS(resolve_input(InputSpec{{}, {}, "5_2", {}}), Error);
    CHECK_THROWS_AS(resolve_input(InputSpec{"Loop[1]", "3_1", {}, {}}), Error);
    CHECK_THROWS_AS(resolve_input(InputSpec{}), Error);
    CHECK_THROWS_AS(build_symmetric_union("3_1", 1), Error);
    const std::string path = "symknot_test_input.pd";
    std::ofstream(path) << "# trefoil\nX[1,5,2,4] X[3,1,4,6] X[5,3,6,2]\n";
    CHECK(resolve_input(InputSpec{path, {}, {}, {}}).diagram.crossing_count() == 3);
    std::remove(path.c_str());
  }

  TEST_CASE("symmetric union emission is deterministic") {
    const auto a = diagram::to_pd_string(build_symmetric_union("5_2", 4));
    CHECK(a == diagram::to_pd_string(build_symmetric_union("5_2", 4)));
    CHECK(build_symmetric_union("5_2", 4).crossing_count() == 14);
    CHECK(diagram::relabel(build_symmetric_union("5_2", 0)) == build_symmetric_union("5_2", 0));
  }

  TEST_CASE("exit-code table and selectors") {
    CHECK(exit_code_for(ErrorCode::MalformedSyntax) == kExitParse);
    CHECK(exit_code_for(ErrorCode::UnknownFixture) == kExitParse);
    CHECK(exit_code_for(ErrorCode::BudgetExceeded) == kExitBudget);
    CHECK(exit_code_for(ErrorCode::InconsistentSystem) == kExitCheckFailed);
    CHECK(exit_code_for(ErrorCode::Domain) == kExitInvalid);
    CHECK(parse_range("-14..14") == std::pair<int, int>{-14, 14});
    CHECK_THROWS_AS(parse_range("3..1"), Error);
    CHECK_THROWS_AS(parse_range("3-4"), Error);
    CHECK(criterion_id("h1") == 4);
    CHECK(criterion_id("10") == 10);
    CHECK_THROWS_AS(criterion_id("nope"), Error);
  }

  TEST_CASE("verification subset") {
    VerifyOptions o;
    o.only = {4, 5, 6};
    const auto results = verify_paper(o);
    REQUIRE(results.size() == 3);
    for (const auto& r : results) CHECK(r.passed);
    CHECK(to_json(results, false)["all_passed"] == true);
  }
}

TEST_SUITE("cli binary") {
  TEST_CASE("exit codes") {
    CHECK(run("invariants --knot 3_1 --no-timings") == kExitOk);
    CHECK(run("invariants --pd 'X[1,2'") == kExitParse);
    CHECK(run("invariants --knot 12n_1") == kExitParse);
    CHECK(run("invariants --bogus") == kExitParse);
    CHECK(run("kh --knot 10_22 --budget-crossings 5") == kExitBudget);
    CHECK(run("invariants --knot 10_22 --budget-crossings 5") == kExitBudget);
    CHECK(run("symun --knot 5_2 --n -4") == kExitOk);
    CHECK(run("symun --knot 3_1 --n 2") == kExitInvalid);
    CHECK(run("h1 --n-range -3..3") == kExitOk);
    CHECK(run("verify-paper --only det,alexander") == kExitOk);
    CHECK(run("verify-paper --only nope") == kExitInvalid);
  }

  TEST_CASE("JSON file output round-trips") {
    const std::string path = "symknot_test_report.json";
    REQUIRE(run("invariants --symun 5_2 --n 3 --field q --json " + path) == kExitOk);
    const std::string text = slurp(path);
    const Json j = Json::parse(text);
    CHECK(emit(j) == text);
    CHECK(j["h1"]["text"] == "Z/49");
    CHECK(j["determinant"]["goeritz"] == "49");
    std::remove(path.c_str());
  }
}
