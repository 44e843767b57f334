#include <doctest.h>

#include "symknot/diagram/fixtures.hpp"
#include "symknot/diagram/surgery.hpp"
#include "symknot/errors.hpp"
#include "symknot/obstruction/obstruction.hpp"

using namespace symknot;
using namespace symknot::obstruction;
using diagram::build_kn;
using diagram::fixture;

TEST_SUITE("obstruction") {
  TEST_CASE("decision is a pure function of certificate and square-freeness") {
    for (Certificate c : {Certificate::ComputedThin, Certificate::FormulaThin, Certificate::Absent})
      for (bool sf : {false, true}) {
        const bool expect = sf && c != Certificate::Absent;
        CHECK((decide(c, sf) == Verdict::SatisfiesCcc) == expect);
        CHECK(decide(c, sf) == decide(c, sf));
      }
  }

  TEST_CASE("template recognition") {
    for (int n = -8; n <= 8; ++n) {
      const auto d = build_kn(n).diagram;
      CHECK(recognize_kn_template(d) == n);
      CHECK(recognize_kn_template(diagram::reverse(d)) == n);
    }
    CHECK_FALSE(recognize_kn_template(fixture("10_22")).has_value());
    CHECK_FALSE(recognize_kn_template(fixture("3_1")).has_value());
  }

  TEST_CASE("formula certificates need a recognised K_n") {
    CHECK_THROWS_AS(l_space_certificate(fixture("10_22"), Mode::Formula), Error);
    const auto v = ccc_verdict(fixture("10_22"), Mode::Formula);
    CHECK(v.l_space_certificate == Certificate::Absent);
    CHECK(v.verdict == Verdict::Inconclusive);
    CHECK_FALSE(v.evidence.certificate_reason.empty());
  }

  TEST_CASE("verdict across the family follows 7 | n") {
    for (int n = -28; n <= 28; ++n) {
      const auto v = ccc_verdict(build_kn(n).diagram, Mode::Formula);
      CAPTURE(n);
      CHECK(v.l_space_certificate == Certificate::FormulaThin);
      CHECK(v.evidence.determinants_agree);
      CHECK(v.square_free == (n % 7 == 0));
      CHECK((v.verdict == Verdict::SatisfiesCcc) == (n % 7 == 0));
      CHECK(v.evidence.kn == n);
    }
  }

  TEST_CASE("computed certificates") {
    const auto k0 = ccc_verdict(build_kn(0).diagram, Mode::Compute);
    CHECK(k0.l_space_certificate == Certificate::ComputedThin);
    CHECK(k0.verdict == Verdict::SatisfiesCcc);
    CHECK(k0.evidence.composite_suspected);
    const auto k1 = ccc_verdict(build_kn(1).diagram, Mode::Auto);
    CHECK(k1.l_space_certificate == Certificate::ComputedThin);
    CHECK(k1.verdict == Verdict::Inconclusive);
    CHECK_FALSE(k1.evidence.composite_suspected);
    const auto t = ccc_verdict(fixture("3_1"), Mode::Compute);
    CHECK(t.verdict == Verdict::SatisfiesCcc);
    CHECK(t.h1.to_string() == "Z/3");
  }

  TEST_CASE("unknot and 5_2") {
    const auto u = ccc_verdict(diagram::PlanarDiagram::unknot(), Mode::Compute);
    CHECK(u.h1.is_trivial());
    CHECK(u.square_free);
    CHECK(u.l_space_certificate == Certificate::ComputedThin);
    CHECK(u.verdict == Verdict::SatisfiesCcc);
    CHECK(l_space_certificate(fixture("5_2"), Mode::Compute).kind == Certificate::ComputedThin);
    CHECK(l_space_certificate(build_kn(14).diagram, Mode::Formula).kind == Certificate::FormulaThin);
  }

  TEST_CASE("budget overrun gives an absent certificate") {
    const auto v = ccc_verdict(fixture("5_2"), Mode::Compute, {3, 1});
    CHECK(v.l_space_certificate == Certificate::Absent);
    CHECK(v.verdict == Verdict::Inconclusive);
    CHECK(v.square_free);
  }

  TEST_CASE("links are rejected") { CHECK_THROWS_AS(ccc_verdict(fixture("hopf_negative"), Mode::Compute), Error); }
}
