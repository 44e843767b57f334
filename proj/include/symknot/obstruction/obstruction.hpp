#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symknot/algebra/abelian_group.hpp"
#include "symknot/algebra/bigint.hpp"
#include "symknot/algebra/bigraded.hpp"
#include "symknot/diagram/planar_diagram.hpp"
#include "symknot/khovanov/homology.hpp"

namespace symknot::obstruction {

enum class Certificate { ComputedThin, FormulaThin, Absent };
enum class Verdict { SatisfiesCcc, Inconclusive };
enum class Mode {
  /// Always compute F2 homology.
  Compute,
  /// Use the closed formula; only for recognised K_n diagrams.
  Formula,
  /// Compute within the F2 budget, otherwise fall back to Formula.
  Auto,
};

const char* to_string(Certificate c);
const char* to_string(Verdict v);
const char* to_string(Mode m);

struct LSpaceCertificate {
  Certificate kind = Certificate::Absent;
  std::string reason;
  /// Occupied diagonals of the unreduced homology used.
  std::vector<int> diagonals;
  /// Reduced F2 homology (computed mode only).
  std::optional<algebra::BigradedDims> reduced;
  /// Template parameter when the diagram was recognised as K_n.
  std::optional<int> kn;
};

/// Returns n when `d` is, up to arc relabelling, the committed K_n diagram.
std::optional<int> recognize_kn_template(const diagram::PlanarDiagram& d);

/// F2-thinness certificate for the branched double cover being an L-space.
/// Compute mode: F2 Khovanov homology must be thin and the reduced
/// peeling must succeed on one diagonal. Formula mode: uses the closed formula, legal
/// only for K_n (throws Error(Domain) otherwise). Budget overruns yield
/// Absent with a reason.
LSpaceCertificate l_space_certificate(const diagram::PlanarDiagram& d, Mode mode,
                                      const khovanov::KhOptions& opts = {});

struct Evidence {
  algebra::BigInt det_goeritz;
  algebra::BigInt det_alexander;
  bool determinants_agree = false;
  std::vector<int> diagonals;
  std::optional<int> kn;
  /// K_0 = J # m(J) is a connected sum.
  bool composite_suspected = false;
  std::string certificate_reason;
};

struct ObstructionVerdict {
  Certificate l_space_certificate = Certificate::Absent;
  algebra::AbelianGroup h1;
  bool square_free = false;
  Verdict verdict = Verdict::Inconclusive;
  Evidence evidence;
};

/// SatisfiesCcc iff a certificate is present and H1 is square-free.
Verdict decide(Certificate cert, bool square_free);

ObstructionVerdict ccc_verdict(const diagram::PlanarDiagram& d, Mode mode, const khovanov::KhOptions& opts = {});

}  // namespace symknot::obstruction
