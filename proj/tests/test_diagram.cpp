#include <doctest.h>

#include <map>
#include <set>

#include "support/oracles.hpp"
#include "symknot/diagram/faces.hpp"
#include "symknot/diagram/fixtures.hpp"
#include "symknot/diagram/planar_diagram.hpp"
#include "symknot/diagram/surgery.hpp"
#include "symknot/errors.hpp"

using namespace symknot;
using namespace symknot::diagram;

namespace {

ErrorCode code_of(const std::string& pd) {
  try {
    parse_pd(pd);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse error for " << pd);
  return ErrorCode::Domain;
}

using Poly = std::map<int, std::int64_t>;

Poly multiply(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) r[ea + eb] += ca * cb;
  for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

Poly invert(const Poly& p) {
  Poly r;
  for (const auto& [e, c] : p) r[-e] = c;
  return r;
}

}  // namespace

TEST_SUITE("pd parsing") {
  TEST_CASE("accepted syntaxes") {
    const auto a = parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]");
    const auto b = parse_pd("PD[X[1, 5, 2, 4], X[3, 1, 4, 6],\n X[5, 3, 6, 2]]  # trefoil");
    CHECK(a == b);
    CHECK(a.crossing_count() == 3);
    CHECK(a.arc_count() == 6);
    CHECK(a.is_knot());
    CHECK(parse_pd("Loop[1]") == PlanarDiagram::unknot());
    CHECK(parse_pd("Loop[3] Loop[8]").components() == 2);
  }

  TEST_CASE("round trip on every fixture") {
    for (const auto& f : fixtures()) {
      const auto d = fixture(f.name);
      CHECK(parse_pd(to_pd_string(d)) == d);
    }
  }

  TEST_CASE("errors carry stable codes") {
    CHECK(code_of("") == ErrorCode::MalformedSyntax);
    CHECK(code_of("X[1,2,3]") == ErrorCode::MalformedSyntax);
    CHECK(code_of("X[1,2,3,4") == ErrorCode::MalformedSyntax);
    CHECK(code_of("Y[1,2,3,4]") == ErrorCode::MalformedSyntax);
    CHECK(code_of("X[0,1,1,0]") == ErrorCode::MalformedSyntax);
    CHECK(code_of("X[-1,1,2,2]") == ErrorCode::MalformedSyntax);
    CHECK(code_of("X[1,2,3,4]") == ErrorCode::ArcMultiplicity);
    CHECK(code_of("X[1,1,1,2]") == ErrorCode::ArcMultiplicity);
    CHECK(code_of("X[1,1,2,2] Loop[2]") == ErrorCode::ArcMultiplicity);
    CHECK(code_of("X[1,2,3,4] X[1,4,3,2]") == ErrorCode::InconsistentOrientation);
  }
}

TEST_SUITE("diagram structure") {
  TEST_CASE("signs and writhe") {
    const auto t = fixture("3_1");
    CHECK((t.writhe() == 3 || t.writhe() == -3));
    CHECK(fixture("4_1").writhe() == 0);
    const auto hopf = fixture("hopf_negative");
    CHECK(hopf.components() == 2);
    CHECK(hopf.sign(0) == -1);
    CHECK(hopf.sign(1) == -1);
    CHECK(fixture("unknot_kink").writhe() == 1);
    for (const auto& f : fixtures()) {
      const auto d = fixture(f.name);
      CHECK(d.positive_crossings() + d.negative_crossings() == d.crossing_count());
    }
  }

  TEST_CASE("arc endpoints are consistent") {
    for (const auto& f : fixtures()) {
      const auto d = fixture(f.name);
      for (std::size_t i = 0; i < d.arc_labels().size(); ++i) {
        const int label = d.arc_labels()[i];
        CHECK(d.arc_at(d.arc_tail(i)) == label);
        CHECK(d.arc_at(d.arc_head(i)) == label);
        CHECK(d.departs_at(d.arc_tail(i)));
        CHECK(d.partner(d.arc_tail(i)) == d.arc_head(i));
      }
    }
    CHECK_THROWS_AS(fixture("3_1").arc_index(99), Error);
  }

  TEST_CASE("faces satisfy Euler's formula and use every arc side once") {
    for (const auto& f : fixtures()) {
      const auto d = fixture(f.name);
      if (!d.is_connected()) {
        CHECK_THROWS_AS(faces(d), Error);
        continue;
      }
      const auto fs = faces(d);
      CAPTURE(f.name);
      if (d.crossing_count() > 0) CHECK(fs.size() == d.crossing_count() + 2);
      std::multiset<std::pair<int, bool>> sides;
      for (const auto& face : fs)
        for (const auto& s : face.sides) sides.insert({s.arc, s.left});
      for (int label : d.arc_labels()) {
        CHECK(sides.count({label, true}) == 1);
        CHECK(sides.count({label, false}) == 1);
      }
    }
  }

  TEST_CASE("unknown fixture") { CHECK_THROWS_AS(fixture("11n_34"), Error); }
}

TEST_SUITE("diagram operations") {
  TEST_CASE("mirror is an involution that negates the writhe and inverts Jones") {
    for (const auto& f : fixtures()) {
      const auto d = fixture(f.name);
      const auto m = mirror(d);
      CHECK(mirror(m) == relabel(d));
      CHECK(m.writhe() == -d.writhe());
      CHECK(test::naive_jones_quarter(m) == invert(test::naive_jones_quarter(d)));
      const auto r = planar_reflection(d);
      CHECK(r.writhe() == -d.writhe());
      CHECK(test::naive_jones_quarter(r) == invert(test::naive_jones_quarter(d)));
    }
  }

  TEST_CASE("reverse and relabel preserve knot type data") {
    for (const auto& f : fixtures()) {
      const auto d = fixture(f.name);
      if (!d.is_knot()) continue;
      CHECK(reverse(d).writhe() == d.writhe());
      CHECK(test::naive_jones_quarter(reverse(d)) == test::naive_jones_quarter(d));
      const auto r = relabel(d);
      CHECK(relabel(r) == r);
      CHECK(test::naive_jones_quarter(r) == test::naive_jones_quarter(d));
    }
  }

  TEST_CASE("connected sum multiplies Jones polynomials") {
    const auto a = fixture("3_1"), b = fixture("4_1");
    const auto s = connected_sum(a, b, a.arc_labels().front(), b.arc_labels().back());
    CHECK(s.crossing_count() == 7);
    CHECK(s.is_knot());
    CHECK(test::naive_jones_quarter(s) == multiply(test::naive_jones_quarter(a), test::naive_jones_quarter(b)));
    CHECK_THROWS_AS(connected_sum(a, fixture("hopf_negative"), 1, 1), Error);
  }

  TEST_CASE("twist parameter") {
    CHECK(TwistParameter(-3).value() == -3);
    const auto inf = TwistParameter::infinity();
    CHECK(inf.is_infinite());
    CHECK_THROWS_AS(inf.value(), Error);
  }

  TEST_CASE("twist insertion adds |n| crossings of sign(n)") {
    const auto d = fixture("4_1");
    const auto fs = faces(d);
    const auto& face = fs.front();
    REQUIRE(face.sides.size() >= 2);
    const int a = face.sides[0].arc, b = face.sides[1].arc;
    for (int n : {-3, -1, 1, 2}) {
      const auto su = twist_insert_with_site(d, TangleSite{a, a, b, b}, n);
      CHECK(su.diagram.crossing_count() == 4 + static_cast<std::size_t>(std::abs(n)));
      int twist_sign_sum = 0;
      for (std::size_t c = 4; c < su.diagram.crossing_count(); ++c) twist_sign_sum += su.diagram.sign(c);
      CHECK(std::abs(twist_sign_sum) == std::abs(n));
    }
    CHECK_THROWS_AS(twist_insert(d, TangleSite{a, b, b, a}, 1), Error);
    CHECK_THROWS_AS(twist_insert(d, TangleSite{a, a, b, b}, TwistParameter::infinity()), Error);
  }

  TEST_CASE("symmetric union crossing count, signs and fusion") {
    const auto j = fixture(kn_template().partial_knot);
    const Poly unlink2{{2, -1}, {-2, -1}};
    for (int n = -6; n <= 6; ++n) {
      const auto su = build_kn(n);
      CAPTURE(n);
      CHECK(su.diagram.crossing_count() == 2 * j.crossing_count() + static_cast<std::size_t>(std::abs(n)));
      CHECK(su.diagram.is_knot());
      CHECK(su.n == n);
      for (std::size_t c = 2 * j.crossing_count(); c < su.diagram.crossing_count(); ++c)
        CHECK(su.diagram.sign(c) == (n > 0 ? 1 : -1));
      if (n == 0) {
        CHECK(su.twist_site.is_trivial());
        continue;
      }
      const auto fused = fusion_resolution(su.diagram, su.twist_site);
      CHECK(fused.components() == 2);
      CHECK(fused.crossing_count() == 2 * j.crossing_count());
      CHECK(test::naive_bracket(fused) == unlink2);
    }
    CHECK_THROWS_AS(symmetric_union(j, SymmetricUnionSite{2, 2, Side::Left}, 1), Error);
    CHECK_THROWS_AS(symmetric_union(PlanarDiagram::unknot(), kn_template().site, 1), Error);
  }

  TEST_CASE("K_0 is J # m(J)") {
    const auto j = fixture(kn_template().partial_knot);
    const auto k0 = build_kn(0).diagram;
    CHECK(test::naive_jones_quarter(k0) ==
          multiply(test::naive_jones_quarter(j), invert(test::naive_jones_quarter(j))));
  }

  TEST_CASE("K_-n is the mirror of K_n up to Jones") {
    for (int n = 1; n <= 4; ++n)
      CHECK(test::naive_jones_quarter(build_kn(-n).diagram) ==
            invert(test::naive_jones_quarter(build_kn(n).diagram)));
  }

  TEST_CASE("fusion rejects non-twist sites") {
    const auto su = build_kn(2);
    CHECK_THROWS_AS(fusion_resolution(su.diagram, TangleSite{1, 1, 2, 2}), Error);
  }

  TEST_CASE("crossing resolutions") {
    const auto t = fixture("3_1");
    for (std::size_t c = 0; c < 3; ++c) {
      const auto s0 = resolve_crossing(t, c, oriented_smoothing(t, c));
      const auto s1 = resolve_crossing(t, c, 1 - oriented_smoothing(t, c));
      CHECK(s0.crossing_count() == 2);
      CHECK(s0.components() == 2);
      CHECK(s1.components() == 1);
    }
    CHECK_THROWS_AS(resolve_crossing(t, 7, 0), Error);
  }

  TEST_CASE("connected sum with the unknot, and J # m(J)") {
    const auto j = fixture("5_2");
    CHECK(connected_sum(PlanarDiagram::unknot(), j, 1, 1).crossing_count() == 5);
    CHECK(test::naive_jones_quarter(connected_sum(PlanarDiagram::unknot(), j, 1, 1)) == test::naive_jones_quarter(j));
    CHECK(connected_sum(j, mirror(j), 1, 1).crossing_count() == 10);
  }

  TEST_CASE("n = 0 twist insertion is a relabelling") {
    const auto d = fixture("4_1");
    const auto fs = faces(d);
    const int a = fs.front().sides[0].arc, b = fs.front().sides[1].arc;
    CHECK(twist_insert(d, TangleSite{a, a, b, b}, 0) == relabel(d));
  }

  TEST_CASE("symmetric union of an unknot diagram") {
    for (int n : {-1, 1, 2}) {
      const auto su = symmetric_union(fixture("unknot_kink"), SymmetricUnionSite{1, 2, Side::Left}, n);
      CHECK(su.diagram.crossing_count() == 2 + static_cast<std::size_t>(std::abs(n)));
      CHECK(test::naive_jones_quarter(su.diagram) == Poly{{0, 1}});
    }
  }

  TEST_CASE("pretzel (3,1,-3)") {
    const auto p = pretzel({3, 1, -3});
    CHECK(p.diagram.crossing_count() == 7);
    CHECK(p.diagram.is_knot());
    CHECK(p.columns.size() == 3);
    CHECK(p.diagram == fixture("pretzel_3_1_-3"));
    CHECK_THROWS_AS(pretzel({2, 0}), Error);
    const auto fused = fusion_resolution(p.diagram, p.columns[1]);
    CHECK(fused.components() == 2);
    CHECK(test::naive_bracket(fused) == Poly{{2, -1}, {-2, -1}});
  }
}
