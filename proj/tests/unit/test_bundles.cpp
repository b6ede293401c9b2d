#include <doctest.h>

#include "ncpb/bundles.hpp"
#include "ncpb/errors.hpp"
#include "support.hpp"

using namespace ncpb;

namespace {

DynamicalSystem group_algebra_dual(long long n) {
  return dual_action(build_crossed_product(trivial_factor_system(trivial_outer_action(FinAbGroup({n}), scalar_algebra()))));
}

}  // namespace

TEST_CASE("Fourier decomposition") {
  SUBCASE("trivial action") {
    DynamicalSystem ds = make_dynamical_system(matrix_algebra(2), FinAbGroup({3}), {CycloMatrix::identity(4)});
    auto dec = fourier_decompose(ds);
    CHECK(dec.dimensions() == std::vector<std::size_t>{4, 0, 0});
    CHECK(verify_decomposition(ds, dec));
  }
  SUBCASE("group algebras with the dual action") {
    for (long long n = 1; n <= 6; ++n) {
      DynamicalSystem ds = group_algebra_dual(n);
      auto dec = fourier_decompose(ds);
      CHECK(dec.dimensions() == std::vector<std::size_t>(static_cast<std::size_t>(n), 1));
      CHECK(verify_decomposition(ds, dec));
      for (std::size_t i = 0; i < dec.projections.size(); ++i)
        for (std::size_t j = 0; j < dec.projections.size(); ++j) {
          CycloMatrix pp = dec.projections[i] * dec.projections[j];
          CHECK((i == j ? pp == dec.projections[i] : pp.is_zero()));
        }
    }
  }
  SUBCASE("conductor must be a multiple of the exponent") {
    CHECK_THROWS_AS(fourier_decompose(group_algebra_dual(3), 2), DomainError);
  }
}

TEST_CASE("clock and shift") {
  ClockShift one = clock_shift_system(1);
  CHECK(one.ok());
  CHECK(one.system.algebra.dim() == 1);
  for (long long n = 2; n <= 4; ++n) {
    ClockShift cs = clock_shift_system(n);
    CHECK(cs.ok());
    CHECK(cs.decomposition.dimensions() == std::vector<std::size_t>(static_cast<std::size_t>(n * n), 1));
    REQUIRE(cs.report.certificate);
    CHECK(verify_certificate(cs.system, *cs.report.certificate));
    SplitWitness sw = split_witness(cs.system, *cs.report.certificate);
    CHECK(verify_split_witness(cs.system, sw));
    TrivialityCertificate back = certificate_from_split(cs.system, sw);
    CHECK(back.witnesses == cs.report.certificate->witnesses);
  }
  CHECK_THROWS_AS(clock_shift_system(0), DomainError);
}

TEST_CASE("certification on group algebras and the broken witness") {
  DynamicalSystem ds = group_algebra_dual(4);
  auto dec = fourier_decompose(ds);
  CertifyReport rep = certify_trivial(ds, dec);
  REQUIRE(rep.ok);
  CHECK(rep.certificate->witnesses[0].value == ds.algebra.basis(1));

  CertifyOptions wrong;
  wrong.witnesses = {ds.algebra.basis(2)};
  CertifyReport bad = certify_trivial(ds, dec, wrong);
  CHECK_FALSE(bad.ok);
  CHECK(bad.failures.size() == 1);

  TrivialityCertificate broken = *rep.certificate;
  broken.witnesses[0] = Unit{Cyclo::zeta(8) * ds.algebra.basis(1), Cyclo::zeta(8, -1) * ds.algebra.basis(3)};
  CHECK_FALSE(verify_certificate(ds, broken));
  CHECK_THROWS_AS(split_witness(ds, broken), DomainError);
}

TEST_CASE("central normalization") {
  FinAbGroup g({2});
  DynamicalSystem ds = group_algebra_dual(2);
  auto dec = fourier_decompose(ds);
  const StructureAlgebra& a = ds.algebra;
  const Cyclo i = Cyclo::zeta(4);
  CentralNormalization cn = central_normalize(ds, dec, 0, i * a.basis(1), a.scalar(i));
  CHECK(cn.witness.value == a.basis(1));
  CHECK(cn.a_powers.size() == 2);
  CentralNormalization plain = central_normalize(ds, dec, 0, a.basis(1), a.unit());
  CHECK(plain.witness.value == a.basis(1));
  CHECK_THROWS_AS(central_normalize(ds, dec, 0, i * a.basis(1), a.unit()), DomainError);

  // M_2 + M_2 with the swap: the fixed algebra is M_2 embedded diagonally, not central
  StructureAlgebra mm = direct_sum(matrix_algebra(2), matrix_algebra(2));
  CycloMatrix swap(8, 8);
  for (std::size_t k = 0; k < 4; ++k) {
    swap(k + 4, k) = 1;
    swap(k, k + 4) = 1;
  }
  DynamicalSystem sw = make_dynamical_system(mm, g, {swap});
  auto sdec = fourier_decompose(sw);
  CycloVector a1 = mm.zero();
  for (std::size_t k : {0u, 3u}) {
    a1[k] = 1;
    a1[k + 4] = -1;
  }
  CHECK_THROWS_AS(central_normalize(sw, sdec, 0, a1, mm.unit()), DomainError);
}

TEST_CASE("spectrum actions and covering trivializations") {
  // functions on C_3 with translation: free, one orbit
  CycloMatrix shift(3, 3);
  for (std::size_t x = 0; x < 3; ++x) shift((x + 2) % 3, x) = 1;
  DynamicalSystem ds = make_dynamical_system(function_algebra({"0", "1", "2"}), FinAbGroup({3}), {shift});
  SpectrumAction sa = spectrum_action(ds);
  CHECK(sa.free);
  CHECK(sa.orbit_count == 1);
  auto dec = fourier_decompose(ds);
  CertifyReport rep = certify_trivial(ds, dec);
  REQUIRE(rep.ok);
  CoveringTrivialization cov = trivialize_covering(ds, sa, *rep.certificate);
  CHECK(cov.verdict);

  // trivial action on two points: not free, and A_1 = 0
  DynamicalSystem triv = make_dynamical_system(function_algebra({"p", "q"}), FinAbGroup({2}), {CycloMatrix::identity(2)});
  SpectrumAction st = spectrum_action(triv);
  CHECK_FALSE(st.free);
  REQUIRE(st.fixed_point);
  CHECK(st.fixed_point->second == 1);
  CHECK_FALSE(certify_trivial(triv, fourier_decompose(triv)).ok);
}

TEST_CASE("graded model of a dynamical system") {
  ClockShift cs = clock_shift_system(2);
  GradedModel m = graded_from_isotypic(cs.system, cs.decomposition);
  CHECK(verify_grading(m.graded));
  CHECK(m.to_graded * m.from_graded == CycloMatrix::identity(4));
  for (const auto& u : m.graded.units) CHECK(u.has_value());
}

TEST_CASE("split test on restricted crossed products") {
  FinAbGroup g({2});
  FactorSystem fs = scalar_factor_system(trivial_outer_action(g, scalar_algebra()), Cochain{2, {0, 0, 0, 1}}, 2);
  CHECK_FALSE(restrict_and_test_split(fs, 0, 2).split);
  SplitTest four = restrict_and_test_split(fs, 0, 4);
  CHECK(four.split);
  REQUIRE(four.witness);
  const StructureAlgebra& a = four.restricted.algebra;
  CHECK(a.multiply(four.witness->value, four.witness->value) == a.unit());
}
