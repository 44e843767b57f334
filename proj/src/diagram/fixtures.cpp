#include "symknot/diagram/fixtures.hpp"

#include "symknot/errors.hpp"

namespace symknot::diagram {

namespace {

std::vector<Fixture> make_fixtures() {
  std::vector<Fixture> out = {
      {"unknot", "Loop[1]", "crossingless unknot"},
      {"unknot_kink", "X[1,1,2,2]", "one positive curl"},
      {"unlink_2", "Loop[1] Loop[2]", "crossingless two-component unlink"},
      {"hopf_negative", "X[1,4,2,3] X[3,2,4,1]", "Hopf link, linking number -1"},
      {"3_1", "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]", "KnotInfo"},
      {"4_1", "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]", "KnotInfo"},
      {"5_2", "X[1,5,2,4] X[3,9,4,8] X[5,1,6,10] X[7,3,8,2] X[9,7,10,6]", "KnotInfo"},
      {"6_1", "X[1,7,2,6] X[3,10,4,11] X[5,3,6,2] X[7,1,8,12] X[9,4,10,5] X[11,9,12,8]", "KnotInfo"},
      {"10_22",
       "X[2,11,3,12] X[4,18,5,17] X[6,16,7,15] X[8,14,9,13] X[10,1,11,2] X[12,19,13,20] X[14,6,15,5] "
       "X[16,8,17,7] X[18,4,19,3] X[20,9,1,10]",
       "KnotInfo"},
  };
  out.push_back({"pretzel_3_1_-3", to_pd_string(pretzel({3, 1, -3}).diagram), "pretzel P(3,1,-3)"});
  return out;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = make_fixtures();
  return all;
}

PlanarDiagram fixture(const std::string& name) {
  for (const auto& f : fixtures())
    if (f.name == name) return parse_pd(f.pd);
  throw Error(ErrorCode::UnknownFixture, "unknown fixture '" + name + "'");
}

const KnTemplate& kn_template() {
  static const KnTemplate t{"5_2", SymmetricUnionSite{2, 8, Side::Left}};
  return t;
}

SymmetricUnion build_kn(int n) {
  const KnTemplate& t = kn_template();
  return symmetric_union(fixture(t.partial_knot), t.site, n);
}

}  // namespace symknot::diagram
