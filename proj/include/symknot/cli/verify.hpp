#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "symknot/cli/report.hpp"

namespace symknot::cli {

struct VerifyOptions {
  /// Criterion ids to run; empty runs all ten.
  std::set<int> only;
  /// Overrides the parameter set of the K_n criteria (2-6, 8).
  std::optional<std::pair<int, int>> n_range;
  std::uint64_t seed = 20130901;
  khovanov::KhOptions kh;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string summary;
  /// One "expected ... got ..." line per failed check.
  std::vector<std::string> failures;
  double seconds = 0;
};

/// Maps a selector ("1".."10" or kh52, kh, f2, h1, det, alexander, k1, ccc,
/// skein, props) to a criterion id; throws Error(Domain).
int criterion_id(const std::string& selector);

/// Parses "a..b" (a <= b); throws Error(Domain).
std::pair<int, int> parse_range(const std::string& text);

std::vector<CriterionResult> verify_paper(const VerifyOptions& opts);

Json to_json(const std::vector<CriterionResult>& results, bool timings);

}  // namespace symknot::cli
