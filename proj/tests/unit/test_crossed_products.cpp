#include <doctest.h>

#include "ncpb/crossed_products.hpp"
#include "ncpb/errors.hpp"
#include "support.hpp"

using namespace ncpb;

TEST_CASE("C[C_n] is the crossed product of C by trivial data") {
  for (long long n = 1; n <= 5; ++n) {
    FinAbGroup g({n});
    GradedAlgebra cp = build_crossed_product(trivial_factor_system(trivial_outer_action(g, scalar_algebra())));
    StructureAlgebra ga = group_algebra(g);
    CycloMatrix id = CycloMatrix::identity(static_cast<std::size_t>(n));
    CHECK(verify_morphism(cp.algebra, ga, id));
    CHECK(verify_star_preserving(cp.algebra, ga, id));
    CHECK(verify_grading(cp));
  }
}

TEST_CASE("M_2[C_2] is M_2 tensor C[C_2]") {
  FinAbGroup g({2});
  GradedAlgebra cp = build_crossed_product(trivial_factor_system(trivial_outer_action(g, matrix_algebra(2))));
  StructureAlgebra t = tensor_product(group_algebra(g), matrix_algebra(2));
  // basis g * 4 + i on both sides
  CHECK(verify_morphism(cp.algebra, t, CycloMatrix::identity(8)));
  CHECK(cp.algebra.has_involution());
}

TEST_CASE("twisted crossed products") {
  for (long long n = 2; n <= 4; ++n) {
    FinAbGroup g({n, n});
    Cochain w = bilinear_cocycle(g, n, {{0, 0}, {1, 0}});
    FactorSystem fs = scalar_factor_system(trivial_outer_action(g, scalar_algebra()), w, n);
    GradedAlgebra cp = build_crossed_product(fs);
    CHECK(cp.algebra.dim() == static_cast<std::size_t>(n * n));
    CHECK_FALSE(cp.algebra.is_commutative());
    CHECK(center(cp.algebra).size() == 1);
    CHECK(extract_characteristic_class(cp, table_section(cp)) == fs);
  }
}

TEST_CASE("the involution is anti-multiplicative on random elements") {
  std::mt19937 rng(61);
  FinAbGroup g({3});
  Cochain w = CochainComplex(CoeffModule::mu(3, g)).coboundary(Cochain{1, {0, 1, 1}});
  FactorSystem fs = scalar_factor_system(trivial_outer_action(g, matrix_algebra(2)), w, 3);
  GradedAlgebra cp = build_crossed_product(fs);
  REQUIRE(cp.algebra.has_involution());
  const StructureAlgebra& a = cp.algebra;
  for (int t = 0; t < 10; ++t) {
    CycloVector x = testing::random_vector(rng, a.dim(), 3), y = testing::random_vector(rng, a.dim(), 3);
    CHECK(a.star(a.multiply(x, y)) == a.multiply(a.star(y), a.star(x)));
    CHECK(a.star(a.star(x)) == x);
  }
}

TEST_CASE("non-factor systems are rejected") {
  FinAbGroup g({3});
  Cochain bad{2, std::vector<long long>(9, 0)};
  bad.values[4] = 1;
  FactorSystem fs = scalar_factor_system(trivial_outer_action(g, scalar_algebra()), bad, 3);
  CHECK_THROWS_AS(build_crossed_product(fs), DomainError);
  CHECK_FALSE(verify_algebra(crossed_product_algebra(fs)));
}

TEST_CASE("sections and normal forms") {
  FinAbGroup g({2, 2});
  FactorSystem fs = scalar_factor_system(trivial_outer_action(g, scalar_algebra()),
                                         bilinear_cocycle(g, 2, {{0, 1}, {0, 0}}), 2);
  GradedAlgebra cp = build_crossed_product(fs);
  // rescale the table section by 2 and i: the class changes by a coboundary
  GradedSection sigma = table_section(cp);
  for (std::size_t x = 1; x < sigma.size(); ++x) {
    const Cyclo c = Cyclo(static_cast<long long>(x + 1)) * Cyclo::zeta(4, static_cast<long long>(x));
    sigma[x] = Unit{c * sigma[x].value, c.inverse() * sigma[x].inverse};
  }
  FactorSystem other = extract_characteristic_class(cp, sigma);
  CHECK_FALSE(other == fs);
  StandardForm sf = normalize_to_standard(cp, sigma);
  CHECK(sf.equivalence.verdict);
  CHECK(sf.factor_system == other);
}

TEST_CASE("equivalences from unit cochains") {
  FinAbGroup g({2});
  FactorSystem base = trivial_factor_system(trivial_outer_action(g, matrix_algebra(2)));
  CycloMatrix u(2, 2);
  u(0, 1) = 1;
  u(1, 0) = 1;
  UnitCochain h{one_unit(base.action.algebra), make_unit(base.action.algebra, matrix_element(u))};
  FactorSystem primed = act_unit_cochain(h, base);
  GradedEquivalence eq = build_equivalence(primed, base, h);
  CHECK(eq.verdict);
  CHECK_THROWS_AS(build_equivalence(base, base, h), DomainError);
}

TEST_CASE("dual actions and twisted convolution") {
  FinAbGroup g({3});
  GradedAlgebra cp = build_crossed_product(trivial_factor_system(trivial_outer_action(g, scalar_algebra())));
  DynamicalSystem ds = dual_action(cp);
  CHECK(verify_dynamical_system(ds));
  // lambda acts on v_1 by zeta_3
  CHECK(ds.at(1).apply(cp.algebra.basis(1)) == Cyclo::zeta(3) * cp.algebra.basis(1));

  TwistedConvolution tc = build_twisted_convolution(scalar_algebra(), FinAbGroup({2, 2}),
                                                    bilinear_cocycle(FinAbGroup({2, 2}), 2, {{0, 0}, {1, 0}}), 2);
  CHECK(verify_algebra(tc.graded.algebra));
  CHECK(verify_dynamical_system(tc.dual));

  // untwisted convolution over a dynamical system: C[C_2] acting on functions on C_2
  CycloMatrix flip(2, 2);
  flip(0, 1) = 1;
  flip(1, 0) = 1;
  DynamicalSystem alpha = make_dynamical_system(function_algebra({"a", "b"}), FinAbGroup({2}), {flip});
  TwistedConvolution conv = build_twisted_convolution(alpha);
  CHECK(conv.graded.algebra.dim() == 4);
  CHECK(verify_algebra(conv.graded.algebra));
  // functions on C_2 crossed by translation is M_2: the center is one-dimensional
  CHECK(center(conv.graded.algebra).size() == 1);
}
