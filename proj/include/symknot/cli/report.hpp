#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "symknot/algebra/abelian_group.hpp"
#include "symknot/algebra/bigraded.hpp"
#include "symknot/algebra/laurent.hpp"
#include "symknot/diagram/planar_diagram.hpp"
#include "symknot/errors.hpp"
#include "symknot/khovanov/homology.hpp"
#include "symknot/obstruction/obstruction.hpp"

namespace symknot::cli {

using Json = nlohmann::json;

inline constexpr const char* kReportSchema = "symknot.invariants/1";
inline constexpr const char* kVerifySchema = "symknot.verify/1";

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitParse = 2,
  kExitBudget = 3,
  kExitInvalid = 4,
};

/// Maps an engine error onto the exit-code table.
int exit_code_for(ErrorCode code);

/// Where a diagram comes from: exactly one of pd / knot / symun is set.
struct InputSpec {
  std::optional<std::string> pd;
  std::optional<std::string> knot;
  std::optional<std::string> symun;
  std::optional<int> n;
};

struct ResolvedInput {
  std::string id;
  diagram::PlanarDiagram diagram;
};

/// Parses / builds the diagram. A pd value naming a readable file is read
/// from disk. Throws Error (ParseError, UnknownFixture, Domain).
ResolvedInput resolve_input(const InputSpec& spec);

/// Diagram of K_n(J); only J = "5_2" carries a template.
diagram::PlanarDiagram build_symmetric_union(const std::string& j, int n);

struct ReportOptions {
  bool field_q = true;
  bool field_f2 = true;
  khovanov::KhOptions kh;
  obstruction::Mode certificate = obstruction::Mode::Auto;
  bool timings = true;
};

struct InvariantReport {
  Json body;
  std::vector<std::string> failures;
  bool budget_exceeded = false;
};

/// Computes every invariant, cross-checks the channels and records the
/// outcome. Stage errors are reported inside the body, never thrown.
InvariantReport invariant_report(const ResolvedInput& input, const ReportOptions& opts);

Json to_json(const algebra::LaurentPolynomial& p, const std::string& var);
Json to_json(const algebra::BigradedDims& dims);
Json to_json(const algebra::AbelianGroup& g);
algebra::BigradedDims bigraded_from_json(const Json& j);
algebra::LaurentPolynomial laurent_from_json(const Json& j);

/// Canonical serialisation (sorted keys, two-space indent, trailing newline).
std::string emit(const Json& j);

/// Drops every "timings" member, recursively.
Json strip_timings(Json j);

}  // namespace symknot::cli
