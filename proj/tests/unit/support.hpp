#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "ncpb/algebras.hpp"
#include "ncpb/exact_scalars.hpp"
#include "ncpb/linear_algebra.hpp"

namespace testing {

using ncpb::Cyclo;
using ncpb::CycloMatrix;
using ncpb::CycloVector;
using ncpb::Rational;

// Floating-point image of x under zeta_N -> exp(2 pi i / N); an oracle that
// shares no code with the exact arithmetic.
inline std::complex<double> numeric(const Cyclo& x) {
  const double n = static_cast<double>(x.conductor());
  std::complex<double> acc = 0;
  const auto c = x.dense_coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    acc += c[i].get_d() * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(i) / n);
  return acc;
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * (1 + std::abs(a) + std::abs(b));
}

inline Cyclo random_cyclo(std::mt19937& rng, unsigned long n, int range = 3) {
  std::uniform_int_distribution<int> d(-range, range);
  Cyclo x;
  for (unsigned long k = 0; k < n; ++k) {
    int a = d(rng);
    if (a != 0) x += Cyclo(Rational(a, 1 + static_cast<int>(rng() % 3))) * Cyclo::zeta(n, static_cast<long long>(k));
  }
  return x;
}

inline CycloMatrix random_matrix(std::mt19937& rng, std::size_t m, unsigned long n = 1, int range = 3) {
  CycloMatrix a(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a(i, j) = random_cyclo(rng, n, range);
  return a;
}

inline CycloMatrix random_invertible(std::mt19937& rng, std::size_t m, unsigned long n = 1) {
  while (true) {
    CycloMatrix a = random_matrix(rng, m, n);
    if (ncpb::matrix_det_inverse(a).inverse) return a;
  }
}

inline CycloVector random_vector(std::mt19937& rng, std::size_t d, unsigned long n = 1) {
  CycloVector v;
  for (std::size_t i = 0; i < d; ++i) v.push_back(random_cyclo(rng, n));
  return v;
}

}  // namespace testing
