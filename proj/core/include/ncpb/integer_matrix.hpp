#pragma once

#include <vector>

#include "ncpb/exact_scalars.hpp"

namespace ncpb {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> a_;
};

/// P * M * Q = diag(d_0, d_1, ...) with d_i | d_{i+1}, d_i >= 0.
/// Only the column transform Q and its inverse are tracked; row operations are
/// applied but not recorded.
struct SmithForm {
  std::vector<Integer> diagonal;  // length min(rows, cols); zeros trail
  std::size_t rank = 0;
  IntMatrix right;          // Q, cols x cols, unimodular
  IntMatrix right_inverse;  // Q^{-1}
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Z-basis of {x in Z^cols : m x = 0}.
std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& m);

/// Invariant factors (all > 1) of Z^cols / (row span of relations), followed
/// by one 0 per free summand.
std::vector<long long> cokernel_invariants(const IntMatrix& relations);

/// Rewrites a direct sum of cyclic groups Z/c_i (c_i >= 1) as invariant factors
/// d_1 | d_2 | ... | d_k, all > 1, ascending.
std::vector<long long> normalize_invariant_factors(const std::vector<long long>& cyclic_orders);

}  // namespace ncpb
