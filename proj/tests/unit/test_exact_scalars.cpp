#include <doctest.h>

#include "ncpb/errors.hpp"
#include "support.hpp"

using namespace ncpb;
using testing::close;
using testing::numeric;

TEST_CASE("cyclotomic polynomials") {
  auto as_long = [](unsigned long n) {
    std::vector<long> out;
    for (const auto& c : cyclotomic_polynomial(n)) out.push_back(c.get_si());
    return out;
  };
  CHECK(as_long(1) == std::vector<long>{-1, 1});
  CHECK(as_long(4) == std::vector<long>{1, 0, 1});
  CHECK(as_long(6) == std::vector<long>{1, -1, 1});
  CHECK(as_long(12) == std::vector<long>{1, 0, -1, 0, 1});
  for (unsigned long n = 1; n <= 30; ++n) CHECK(cyclotomic_polynomial(n).size() - 1 == euler_phi(n));
}

TEST_CASE("roots of unity") {
  CHECK(RootOfUnity(3, 6) == RootOfUnity(1, 2));
  CHECK(RootOfUnity(-1, 4) == RootOfUnity(3, 4));
  CHECK(combine(RootOfUnity(1, 4), RootOfUnity(1, 4)) == RootOfUnity(1, 2));
  CHECK(combine(RootOfUnity(1, 3), RootOfUnity(2, 3)).is_identity());
  CHECK(RootOfUnity(1, 6).pow(-2) == RootOfUnity(2, 3));
  CHECK(RootOfUnity::parse("5/10") == RootOfUnity(1, 2));
  CHECK_THROWS_AS(RootOfUnity::parse("x"), DomainError);
  CHECK_THROWS_AS(RootOfUnity(1, 0), DomainError);
}

TEST_CASE("zeta identities") {
  for (unsigned long n = 1; n <= 12; ++n) {
    Cyclo z = Cyclo::zeta(n);
    CHECK(z.pow(static_cast<long long>(n)).is_one());
    Cyclo sum;
    for (unsigned long k = 0; k < n; ++k) sum += z.pow(static_cast<long long>(k));
    CHECK((n == 1 ? sum.is_one() : sum.is_zero()));
    CHECK(z.as_root_of_unity() == RootOfUnity(1, static_cast<long long>(n)));
  }
  CHECK(Cyclo::zeta(4) * Cyclo::zeta(4) == Cyclo(-1));
  CHECK(Cyclo::zeta(6, 3) == Cyclo(-1));
  CHECK(Cyclo::zeta(2) == Cyclo::zeta(4, 2));
  CHECK(Cyclo::zeta(3) + Cyclo::zeta(3, 2) == Cyclo(-1));
  CHECK_FALSE(Cyclo(2).as_root_of_unity().has_value());
  CHECK((Cyclo::zeta(12, 5).as_root_of_unity() == RootOfUnity(5, 12)));
}

TEST_CASE("field axioms against the floating-point image") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned long n = 1 + rng() % 12, m = 1 + rng() % 12;
    Cyclo a = testing::random_cyclo(rng, n), b = testing::random_cyclo(rng, m), c = testing::random_cyclo(rng, n);
    CHECK(close(numeric(a * b), numeric(a) * numeric(b)));
    CHECK(close(numeric(a + b), numeric(a) + numeric(b)));
    CHECK(close(numeric(a.conjugate()), std::conj(numeric(a))));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
    if (!a.is_zero()) {
      CHECK((a * a.inverse()).is_one());
      CHECK(close(numeric(a.inverse()), 1.0 / numeric(a), 1e-7));
    }
  }
}

TEST_CASE("lifting and equality across conductors") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned long n = 1 + rng() % 8;
    Cyclo a = testing::random_cyclo(rng, n);
    Cyclo lifted = a.lifted(n * (1 + rng() % 3));
    CHECK(lifted == a);
    CHECK(close(numeric(lifted), numeric(a)));
  }
  CHECK_THROWS_AS(Cyclo(0).inverse(), DivisionByZero);
}

TEST_CASE("rational roots") {
  CHECK(rational_root(Rational(27, 8), 3) == Rational(3, 2));
  CHECK_FALSE(rational_root(Rational(2), 2).has_value());
  CHECK_FALSE(rational_root(Rational(-1), 3).has_value());
  CHECK(positive_rational_part(Cyclo(-4)) == Rational(4));
  CHECK(positive_rational_part(Cyclo(3) * Cyclo::zeta(5, 2)) == Rational(3));
  CHECK_FALSE(positive_rational_part(Cyclo(1) + Cyclo::zeta(5)).has_value());
}

TEST_CASE("matrices") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = 1 + rng() % 4;
    CycloMatrix a = testing::random_matrix(rng, m, 1 + rng() % 6), b = testing::random_matrix(rng, m, 1 + rng() % 6);
    CHECK((a * b).conjugate_transpose() == b.conjugate_transpose() * a.conjugate_transpose());
    CHECK(a.transpose().transpose() == a);
    CycloVector v = testing::random_vector(rng, m);
    CHECK((a * b).apply(v) == a.apply(b.apply(v)));
  }
}
