#include "symknot/obstruction/obstruction.hpp"

#include "symknot/diagram/fixtures.hpp"
#include "symknot/diagram/surgery.hpp"
#include "symknot/errors.hpp"
#include "symknot/goeritz/goeritz.hpp"
#include "symknot/polynomials/alexander.hpp"

namespace symknot::obstruction {

const char* to_string(Certificate c) {
  switch (c) {
    case Certificate::ComputedThin: return "COMPUTED_THIN";
    case Certificate::FormulaThin: return "FORMULA_THIN";
    case Certificate::Absent: return "ABSENT";
  }
  return "ABSENT";
}

const char* to_string(Verdict v) { return v == Verdict::SatisfiesCcc ? "SATISFIES_CCC" : "INCONCLUSIVE"; }

const char* to_string(Mode m) {
  switch (m) {
    case Mode::Compute: return "compute";
    case Mode::Formula: return "formula";
    case Mode::Auto: return "auto";
  }
  return "auto";
}

std::optional<int> recognize_kn_template(const diagram::PlanarDiagram& d) {
  const std::size_t base = 2 * diagram::fixture(diagram::kn_template().partial_knot).crossing_count();
  if (d.crossing_count() < base || !d.is_knot()) return std::nullopt;
  const int extra = static_cast<int>(d.crossing_count() - base);
  const diagram::PlanarDiagram canonical = diagram::relabel(d);
  for (int n : {extra, -extra}) {
    const diagram::PlanarDiagram kn = diagram::build_kn(n).diagram;
    if (kn == canonical || diagram::relabel(diagram::reverse(kn)) == canonical) return n;
  }
  return std::nullopt;
}

LSpaceCertificate l_space_certificate(const diagram::PlanarDiagram& d, Mode mode, const khovanov::KhOptions& opts) {
  LSpaceCertificate cert;
  cert.kn = recognize_kn_template(d);
  if (mode == Mode::Auto) {
    const std::size_t limit = opts.max_crossings ? opts.max_crossings : khovanov::default_budget().f2;
    mode = d.crossing_count() <= limit || !cert.kn ? Mode::Compute : Mode::Formula;
  }
  if (mode == Mode::Formula) {
    if (!cert.kn) throw Error(ErrorCode::Domain, "formula certificate applies only to the K_n family");
    cert.kind = Certificate::FormulaThin;
    cert.diagonals = khovanov::is_thin(khovanov::closed_formula_kn(*cert.kn)).diagonals;
    cert.reason = "closed formula for K_" + std::to_string(*cert.kn) + " (thin over Q, extended to F2)";
    return cert;
  }
  try {
    const auto kh = khovanov::kh_homology(d, khovanov::Field::F2, opts);
    const auto thin = khovanov::is_thin(kh);
    cert.diagonals = thin.diagonals;
    if (!thin.thin) {
      cert.reason = "F2 Khovanov homology is not thin";
      return cert;
    }
    cert.reduced = khovanov::reduced_f2_dims(kh);
    if (cert.reduced->diagonals().size() != 1) {
      cert.reason = "reduced F2 homology is not on a single diagonal";
      return cert;
    }
    cert.kind = Certificate::ComputedThin;
    cert.reason = "F2 Khovanov homology computed and thin";
  } catch (const BudgetError& e) {
    cert.kind = Certificate::Absent;
    cert.reason = e.what();
  }
  return cert;
}

Verdict decide(Certificate cert, bool square_free) {
  return cert != Certificate::Absent && square_free ? Verdict::SatisfiesCcc : Verdict::Inconclusive;
}

ObstructionVerdict ccc_verdict(const diagram::PlanarDiagram& d, Mode mode, const khovanov::KhOptions& opts) {
  if (!d.is_knot()) throw Error(ErrorCode::Domain, "the obstruction applies to knots");
  ObstructionVerdict out;
  out.h1 = goeritz::h1_branched_cover(d);
  out.square_free = algebra::is_square_free_decomposition(out.h1);
  out.evidence.det_goeritz = goeritz::determinant_goeritz(d);
  out.evidence.det_alexander = polynomials::determinant_alexander(d);
  out.evidence.determinants_agree =
      out.evidence.det_goeritz == out.evidence.det_alexander && out.evidence.det_goeritz == out.h1.order();
  try {
    const LSpaceCertificate cert = l_space_certificate(d, mode, opts);
    out.l_space_certificate = cert.kind;
    out.evidence.diagonals = cert.diagonals;
    out.evidence.kn = cert.kn;
    out.evidence.certificate_reason = cert.reason;
  } catch (const Error& e) {
    out.l_space_certificate = Certificate::Absent;
    out.evidence.kn = recognize_kn_template(d);
    out.evidence.certificate_reason = e.what();
  }
  out.evidence.composite_suspected = out.evidence.kn && *out.evidence.kn == 0;
  out.verdict = decide(out.l_space_certificate, out.square_free);
  if (!out.evidence.determinants_agree) out.verdict = Verdict::Inconclusive;
  return out;
}

}  // namespace symknot::obstruction
