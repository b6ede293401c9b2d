#include <doctest.h>

#include "ncpb/errors.hpp"
#include "ncpb/serialization.hpp"
#include "support.hpp"

using namespace ncpb;

TEST_CASE("scalars and matrices round trip") {
  std::mt19937 rng(71);
  for (int t = 0; t < 50; ++t) {
    Cyclo x = testing::random_cyclo(rng, 1 + rng() % 12);
    CHECK(cyclo_from_json(to_json(x)) == x);
  }
  CycloMatrix m = testing::random_matrix(rng, 3, 5);
  CHECK(matrix_from_json(to_json(m)) == m);
  CHECK(to_json(Cyclo(Rational(-3, 4))).dump() == R"({"N":1,"c":["-3/4"]})");
}

TEST_CASE("structures round trip and re-verify") {
  FinAbGroup g({2, 3});
  CHECK(group_from_json(to_json(g)) == g);
  StructureAlgebra a = matrix_algebra(2);
  StructureAlgebra back = algebra_from_json(to_json(a));
  CHECK(verify_morphism(back, a, CycloMatrix::identity(4)));
  CHECK(back.has_involution());

  FactorSystem fs = scalar_factor_system(trivial_outer_action(FinAbGroup({3, 3}), scalar_algebra()),
                                         bilinear_cocycle(FinAbGroup({3, 3}), 3, {{0, 0}, {1, 0}}), 3);
  CHECK(factor_system_from_json(to_json(fs)) == fs);
  GradedAlgebra cp = build_crossed_product(fs);
  GradedAlgebra cp2 = graded_from_json(to_json(cp));
  CHECK(cp2.grading == cp.grading);
  CHECK(cp2.group == cp.group);

  ClockShift cs = clock_shift_system(3);
  DynamicalSystem ds = system_from_json(to_json(cs.system));
  CHECK(ds.table == cs.system.table);
  TrivialityCertificate cert = certificate_from_json(to_json(*cs.report.certificate), ds);
  CHECK(verify_certificate(ds, cert));

  Cochain w{2, {0, 0, 0, 1}};
  CHECK(cochain_from_json(to_json(w)) == w);
  CoeffModule mod = CoeffModule::mu(4, FinAbGroup({2}));
  CHECK(module_from_json(to_json(mod)).roots_of_unity);
}

TEST_CASE("dumps are deterministic") {
  ClockShift a = clock_shift_system(2), b = clock_shift_system(2);
  CHECK(to_json(a.system).dump() == to_json(b.system).dump());
  CHECK(to_json(*a.report.certificate).dump() == to_json(*b.report.certificate).dump());
}

TEST_CASE("malformed input names the path") {
  Json j = to_json(group_algebra(FinAbGroup({2})));
  j["unit"] = "oops";
  try {
    algebra_from_json(j);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.path() == "/unit");
  }
  Json c = to_json(Cyclo(1));
  c["c"][0] = "1/0";
  CHECK_THROWS_AS(cyclo_from_json(c), ParseError);
  CHECK_THROWS_AS(open_envelope(Json{{"version", "ncpb/0"}, {"kind", "algebra"}, {"data", {}}}, "algebra"), ParseError);
  CHECK_THROWS_AS(open_envelope(envelope("algebra", Json::object()), "factor-system"), ParseError);
  CHECK(open_envelope(envelope("algebra", Json{{"x", 1}}), "")["x"] == 1);
}

TEST_CASE("tampered structure constants are rejected on load") {
  Json j = to_json(group_algebra(FinAbGroup({3})));
  // v_1 v_1 = v_2 becomes v_1 v_1 = v_0
  for (auto& p : j["products"])
    if (p[0] == 1 && p[1] == 1) p[2][0][0] = 0;
  CHECK_THROWS_AS(algebra_from_json(j), DomainError);

  ClockShift cs = clock_shift_system(2);
  Json s = to_json(cs.system);
  s["action"][0] = to_json(CycloMatrix::identity(4) + CycloMatrix::identity(4));
  CHECK_THROWS_AS(system_from_json(s), DomainError);
}
