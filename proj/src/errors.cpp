#include "symknot/errors.hpp"

namespace symknot {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedSyntax: return "malformed_syntax";
    case ErrorCode::ArcMultiplicity: return "arc_multiplicity";
    case ErrorCode::InconsistentOrientation: return "inconsistent_orientation";
    case ErrorCode::DisconnectedDiagram: return "disconnected_diagram";
    case ErrorCode::InvalidSite: return "invalid_site";
    case ErrorCode::NotATwistRegion: return "not_a_twist_region";
    case ErrorCode::InfiniteTwist: return "infinite_twist";
    case ErrorCode::IndexOutOfRange: return "index_out_of_range";
    case ErrorCode::Domain: return "domain";
    case ErrorCode::BudgetExceeded: return "budget_exceeded";
    case ErrorCode::InconsistentSystem: return "inconsistent_system";
    case ErrorCode::UnknownFixture: return "unknown_fixture";
    case ErrorCode::Overflow: return "overflow";
  }
  return "unknown";
}

}  // namespace symknot
