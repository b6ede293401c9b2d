#include <doctest.h>

#include "ncpb/errors.hpp"
#include "ncpb/factor_systems.hpp"
#include "support.hpp"

using namespace ncpb;

namespace {

UnitCochain random_unit_cochain(std::mt19937& rng, const OuterAction& s) {
  const StructureAlgebra& b = s.algebra;
  UnitCochain h{one_unit(b)};
  const auto m = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(b.dim()))));
  for (long long g = 1; g < s.group.order(); ++g) {
    if (b.dim() == 1)
      h.push_back(make_unit(b, b.scalar(Cyclo(1 + static_cast<long long>(rng() % 3)) * Cyclo::zeta(4, rng() % 4))));
    else
      h.push_back(make_unit(b, matrix_element(testing::random_invertible(rng, m, 2))));
  }
  return h;
}

}  // namespace

TEST_CASE("validation of scalar factor systems") {
  FinAbGroup g({3});
  OuterAction s = trivial_outer_action(g, scalar_algebra());
  CHECK(validate_factor_system(trivial_factor_system(s)));
  CochainComplex cx(CoeffModule::mu(3, g));
  Cochain bad = cx.zero(2);
  bad.values[1 * 3 + 1] = 1;  // omega(1,1) = zeta, everything else 1
  Verdict v = validate_factor_system(scalar_factor_system(s, bad, 3));
  CHECK(v.ok == static_cast<bool>(cx.is_cocycle(bad)));
  Cochain good = cx.coboundary(Cochain{1, {0, 1, 0}});
  CHECK(validate_factor_system(scalar_factor_system(s, good, 3)));
}

TEST_CASE("delta_S must equal C o omega") {
  FinAbGroup g({2});
  StructureAlgebra m2 = matrix_algebra(2);
  CycloMatrix u(2, 2);
  u(0, 0) = 1;
  u(1, 1) = -1;
  OuterAction s = homomorphic_action(g, m2, std::vector<CycloMatrix>{conjugation_by_unit(m2, matrix_element(u)).matrix});
  CHECK(s.is_homomorphism());
  CHECK(verify_outer_action(s));
  // S is a homomorphism, so omega = 1 is compatible
  CHECK(validate_factor_system(trivial_factor_system(s)));
  // omega(g, g) = u is compatible only with S(g)^2 = C_u, which fails
  FactorSystem fs = trivial_factor_system(s);
  fs.omega[3] = make_unit(m2, matrix_element(u));
  CHECK_FALSE(validate_compatible_pair(fs));
}

TEST_CASE("unit cochains act on factor systems") {
  std::mt19937 rng(53);
  for (const auto& b : {scalar_algebra(), matrix_algebra(2)})
    for (const auto& g : {FinAbGroup({2}), FinAbGroup({3}), FinAbGroup({2, 2})}) {
      FactorSystem fs = trivial_factor_system(trivial_outer_action(g, b));
      for (int t = 0; t < 3; ++t) {
        UnitCochain h = random_unit_cochain(rng, fs.action);
        UnitCochain k = random_unit_cochain(rng, fs.action);
        FactorSystem once = act_unit_cochain(h, fs);
        CHECK(validate_factor_system(once));
        // (k h).x = k.(h.x)
        CHECK(act_unit_cochain(k, once) == act_unit_cochain(multiply_cochains(b, k, h), fs));
        CHECK(act_unit_cochain(invert_cochain(h), fs).action.maps.size() == fs.action.maps.size());
        CHECK(stabilizer_check(trivial_unit_cochain(fs.action), fs));
      }
    }
}

TEST_CASE("d_S h for scalar cochains is the ordinary coboundary") {
  FinAbGroup g({4});
  OuterAction s = trivial_outer_action(g, scalar_algebra());
  CochainComplex cx(CoeffModule::mu(4, g));
  Cochain h{1, {0, 1, 3, 2}};
  UnitCochain u;
  for (auto v : h.values) u.push_back(scalar_unit(s.algebra, v, 4));
  auto d = d_unit_cochain(s, u);
  Cochain dh = cx.coboundary(h);
  for (std::size_t i = 0; i < d.size(); ++i) CHECK(scalar_root(s.algebra, d[i]) == RootOfUnity(dh.values[i], 4));
}

TEST_CASE("kernel equivalence finds Skolem-Noether witnesses") {
  std::mt19937 rng(59);
  StructureAlgebra m2 = matrix_algebra(2);
  FinAbGroup g({3});
  for (int t = 0; t < 3; ++t) {
    // an order-3 inner automorphism: conjugation by P diag(1, zeta_3) P^-1
    CycloMatrix p = testing::random_invertible(rng, 2);
    CycloMatrix d(2, 2);
    d(0, 0) = 1;
    d(1, 1) = Cyclo::zeta(3);
    CycloMatrix u = p * d * *matrix_det_inverse(p).inverse;
    OuterAction s = homomorphic_action(g, m2, std::vector<CycloMatrix>{conjugation_by_unit(m2, matrix_element(u)).matrix});
    KernelEquivalence ke = kernel_equivalent(trivial_outer_action(g, m2), s);
    REQUIRE(ke.status == SearchStatus::found);
    for (long long x = 0; x < 3; ++x) CHECK(conjugation_by_unit(m2, ke.corrected[x].value) == s.at(x));
    for (const auto& v : d_unit_cochain(trivial_outer_action(g, m2), ke.corrected)) CHECK(v == m2.unit());
  }
  CHECK_THROWS(kernel_equivalent(trivial_outer_action(FinAbGroup({2, 2}), m2), trivial_outer_action(FinAbGroup({2, 2}), m2)));
}

TEST_CASE("obstruction") {
  FinAbGroup g({2});
  OuterAction s = trivial_outer_action(g, scalar_algebra());
  // any omega over a commutative algebra with trivial S has d omega = dw
  Obstruction ob = nu_obstruction(s, scalar_factor_system(s, Cochain{2, {0, 0, 0, 1}}, 2).omega);
  CHECK(ob.status == SearchStatus::found);
  REQUIRE(ob.corrected);
  CHECK(validate_factor_system(*ob.corrected));
  CHECK_THROWS_AS(nu_obstruction(s, std::nullopt, 0, 0), BudgetExceeded);
}

TEST_CASE("restriction to a generator") {
  FinAbGroup g({2, 3});
  OuterAction s = trivial_outer_action(g, scalar_algebra());
  Cochain w = bilinear_cocycle(g, 6, {{0, 1}, {0, 0}});
  FactorSystem fs = scalar_factor_system(s, w, 6);
  CHECK(validate_factor_system(fs));
  FactorSystem r = restrict_to_generator(fs, 1);
  CHECK(r.action.group.order() == 3);
  CHECK(validate_factor_system(r));
}
