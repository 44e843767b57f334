#pragma once

#include <stdexcept>
#include <string>

namespace symknot {

enum class ErrorCode {
  MalformedSyntax,
  ArcMultiplicity,
  InconsistentOrientation,
  DisconnectedDiagram,
  InvalidSite,
  NotATwistRegion,
  InfiniteTwist,
  IndexOutOfRange,
  Domain,
  BudgetExceeded,
  InconsistentSystem,
  UnknownFixture,
  Overflow,
};

const char* to_string(ErrorCode code);

/// Base exception for everything the engine reports. The code is stable and
/// is what the CLI maps onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& what)
      : Error(ErrorCode::BudgetExceeded, what) {}
};

}  // namespace symknot
