#include <doctest.h>

#include "ncpb/integer_matrix.hpp"
#include "support.hpp"

using namespace ncpb;

TEST_CASE("inverse, rank and nullspace") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 1 + rng() % 4;
    const unsigned long n = 1 + rng() % 6;
    CycloMatrix a = testing::random_invertible(rng, m, n);
    auto di = matrix_det_inverse(a);
    REQUIRE(di.inverse);
    CHECK(a * *di.inverse == CycloMatrix::identity(m));
    CHECK(rank(a) == m);
    CHECK(nullspace(a).empty());
    CycloVector b = testing::random_vector(rng, m, n);
    auto x = solve(a, b);
    REQUIRE(x);
    CHECK(a.apply(*x) == b);
  }
}

TEST_CASE("singular matrices") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = 3 + rng() % 3;
    CycloMatrix a = testing::random_matrix(rng, m, 1 + rng() % 4);
    // make the last column a combination of the first two
    for (std::size_t i = 0; i < m; ++i) a(i, m - 1) = a(i, 0) * Cyclo(2) - a(i, 1);
    auto di = matrix_det_inverse(a);
    CHECK(di.det.is_zero());
    CHECK_FALSE(di.inverse);
    CHECK(rank(a) < m);
    auto ns = nullspace(a);
    CHECK(ns.size() == m - rank(a));
    for (const auto& v : ns) CHECK(is_zero(a.apply(v)));
    CHECK(column_space_basis(a).size() == rank(a));
    CHECK(in_span(column_space_basis(a), a.column(m - 1)));
  }
}

TEST_CASE("determinant of a Vandermonde matrix in roots of unity") {
  // det V(1, zeta_3, zeta_3^2)^2 = -27
  CycloMatrix v(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) v(i, j) = Cyclo::zeta(3, static_cast<long long>(i * j));
  Cyclo d = matrix_det_inverse(v).det;
  CHECK(d * d == Cyclo(-27));
}

TEST_CASE("smith normal form") {
  IntMatrix m(2, 2);
  m(0, 0) = 2;
  m(0, 1) = 4;
  m(1, 0) = 6;
  m(1, 1) = 8;
  auto s = smith_normal_form(m);
  CHECK(s.diagonal[0] == 2);
  CHECK(s.diagonal[1] == 4);
  CHECK(m * s.right * s.right_inverse == m);
  CHECK(cokernel_invariants(m) == std::vector<long long>{2, 4});
  CHECK(normalize_invariant_factors({2, 3}) == std::vector<long long>{6});
  CHECK(normalize_invariant_factors({4, 6, 1}) == std::vector<long long>{2, 12});

  std::mt19937 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = static_cast<long>(rng() % 13) - 6;
    auto sf = smith_normal_form(a);
    for (std::size_t i = 0; i + 1 < sf.diagonal.size(); ++i)
      if (sf.diagonal[i + 1] != 0) CHECK(sf.diagonal[i + 1] % sf.diagonal[i] == 0);
    CHECK(sf.right * sf.right_inverse == IntMatrix::identity(c));
    for (const auto& k : integer_kernel(a))
      for (std::size_t i = 0; i < r; ++i) {
        Integer acc = 0;
        for (std::size_t j = 0; j < c; ++j) acc += a(i, j) * k[j];
        CHECK(acc == 0);
      }
  }
}
