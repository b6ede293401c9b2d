#include <doctest.h>

#include "ncpb/errors.hpp"
#include "support.hpp"

using namespace ncpb;

TEST_CASE("standard algebras verify") {
  for (std::size_t m = 1; m <= 3; ++m) CHECK(verify_algebra(matrix_algebra(m)));
  CHECK(verify_algebra(group_algebra(FinAbGroup({2, 3}))));
  CHECK(verify_algebra(function_algebra({"a", "b", "c"})));
  CHECK(verify_algebra(scalar_algebra()));
  CHECK(verify_algebra(direct_sum(matrix_algebra(2), scalar_algebra())));
  CHECK(verify_algebra(tensor_product(matrix_algebra(2), group_algebra(FinAbGroup({2})))));
  CHECK(tensor_product(matrix_algebra(2), matrix_algebra(2)).dim() == 16);
  CHECK(group_algebra(FinAbGroup({4})).is_commutative());
  CHECK_FALSE(matrix_algebra(2).is_commutative());
}

TEST_CASE("matrix algebra multiplication matches matrices") {
  std::mt19937 rng(31);
  const StructureAlgebra m3 = matrix_algebra(3);
  for (int t = 0; t < 20; ++t) {
    CycloMatrix a = testing::random_matrix(rng, 3, 4), b = testing::random_matrix(rng, 3, 4);
    CHECK(m3.multiply(matrix_element(a), matrix_element(b)) == matrix_element(a * b));
    CHECK(m3.star(matrix_element(a)) == matrix_element(a.conjugate_transpose()));
    CHECK(element_matrix(matrix_element(a), 3) == a);
  }
}

TEST_CASE("tampered structure constants fail verification") {
  StructureAlgebra a = group_algebra(FinAbGroup({2}));
  std::vector<SparseVector> products;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) products.push_back(a.product(i, j));
  products[3] = {{0, Cyclo(2)}};  // v v = 2: still associative
  CHECK(verify_algebra(StructureAlgebra(a.labels(), products, a.unit())));
  products[1] = {{0, Cyclo(1)}};  // 1 v = 1 breaks unitality
  Verdict v = verify_algebra(StructureAlgebra(a.labels(), products, a.unit()));
  CHECK_FALSE(v.ok);
  CHECK_FALSE(v.detail.empty());
}

TEST_CASE("change of basis is an isomorphism") {
  std::mt19937 rng(41);
  for (const auto& a : {matrix_algebra(2), group_algebra(FinAbGroup({3})), function_algebra({"p", "q"})}) {
    CycloMatrix w = testing::random_invertible(rng, a.dim(), 3);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < a.dim(); ++i) labels.push_back("w" + std::to_string(i));
    StructureAlgebra b = change_basis(a, w, labels);
    CHECK(verify_algebra(b));
    // b -> a sends the i-th basis vector to column i of w
    CHECK(verify_morphism(b, a, w));
    CHECK(verify_star_preserving(b, a, w));
  }
}

TEST_CASE("units, inverses and conjugation") {
  std::mt19937 rng(43);
  const StructureAlgebra m2 = matrix_algebra(2);
  for (int t = 0; t < 20; ++t) {
    CycloMatrix u = testing::random_invertible(rng, 2, 4);
    CycloVector x = matrix_element(u);
    auto inv = m2.inverse(x);
    REQUIRE(inv);
    CHECK(m2.multiply(x, *inv) == m2.unit());
    AlgebraMap phi = conjugation_by_unit(m2, x);
    CHECK(certify_automorphism(m2, phi.matrix).has_value());
    CycloVector w = inner_witness(m2, phi);
    // the witness agrees with u up to a central scalar
    CHECK(conjugation_by_unit(m2, w) == phi);
  }
  CycloMatrix singular(2, 2);
  singular(0, 0) = 1;
  CHECK_FALSE(m2.is_unit(matrix_element(singular)));
  CHECK_THROWS_AS(conjugation_by_unit(m2, matrix_element(singular)), NotInvertible);
  // the flip of C x C is outer
  StructureAlgebra f = function_algebra({"a", "b"});
  CycloMatrix flip(2, 2);
  flip(0, 1) = 1;
  flip(1, 0) = 1;
  auto sw = certify_automorphism(f, flip);
  REQUIRE(sw);
  CHECK_THROWS_AS(inner_witness(f, *sw), DomainError);
}

TEST_CASE("centers") {
  CHECK(center(matrix_algebra(3)).size() == 1);
  CHECK(center(group_algebra(FinAbGroup({2, 2}))).size() == 4);
  CHECK(center(direct_sum(matrix_algebra(2), matrix_algebra(2))).size() == 2);
  CHECK(center(matrix_algebra(2)).front() == matrix_algebra(2).unit());
}

TEST_CASE("unit search") {
  const StructureAlgebra f = function_algebra({"a", "b", "c"});
  // span{e_a, e_b} has no unit: every element vanishes at c
  auto none = find_unit_in_subspace(f, {f.basis(0), f.basis(1)});
  CHECK_FALSE(none.unit);
  auto some = find_unit_in_subspace(f, {f.basis(0) + f.basis(1), f.basis(2)});
  REQUIRE(some.unit);
  CHECK(f.multiply(some.unit->first, some.unit->second) == f.unit());
  CHECK_THROWS_AS(find_unit_in_subspace(f, {f.basis(0), f.basis(1), f.basis(2)}, {}, 1), BudgetExceeded);
}

TEST_CASE("spectra") {
  const StructureAlgebra f = function_algebra({"a", "b", "c"});
  auto sp = spectrum(f);
  CHECK(sp.points.size() == 3);
  // the spectrum of C[C_3] needs cube roots of unity
  const StructureAlgebra g = group_algebra(FinAbGroup({3}));
  auto sg = spectrum(g, 3);
  REQUIRE(sg.points.size() == 3);
  for (std::size_t p = 0; p < 3; ++p) {
    CHECK(sg.evaluate(p, g.unit()).is_one());
    auto x = sg.evaluate(p, g.basis(1));
    CHECK(x.pow(3).is_one());
    CHECK(sg.evaluate(p, g.multiply(g.basis(1), g.basis(1))) == x * x);
  }
  CHECK_THROWS_AS(spectrum(g, 1), DomainError);
}

TEST_CASE("subalgebras") {
  const StructureAlgebra m2 = matrix_algebra(2);
  auto diag = basis_subalgebra(m2, {0, 3});
  CHECK(diag.dim() == 2);
  CHECK(diag.is_commutative());
  CHECK_THROWS_AS(basis_subalgebra(m2, {0, 1}), DomainError);
}
