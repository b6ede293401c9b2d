#include "ncpb/linear_algebra.hpp"

namespace ncpb {

RowEchelon row_reduce(CycloMatrix m) {
  RowEchelon out;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    }
    Cyclo inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) {
      if (!m(r, j).is_zero()) m(r, j) = inv * m(r, j);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Cyclo f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

DetInverse matrix_det_inverse(const CycloMatrix& m) {
  if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  // Eliminate on [m | I], tracking the determinant through pivots and swaps.
  CycloMatrix a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = Cyclo(1);
  }
  Cyclo det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return DetInverse{Cyclo(0), std::nullopt};
    if (p != c) {
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    Cyclo inv = a(c, c).inverse();
    for (std::size_t j = c; j < 2 * n; ++j) {
      if (!a(c, j).is_zero()) a(c, j) = inv * a(c, j);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      Cyclo f = a(i, c);
      for (std::size_t j = c; j < 2 * n; ++j) {
        if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
      }
    }
  }
  CycloMatrix inverse(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inverse(i, j) = a(i, n + j);
  const CycloMatrix id = CycloMatrix::identity(n);
  if (!(m * inverse == id) || !(inverse * m == id)) {
    throw Error("internal: computed inverse failed verification");
  }
  return DetInverse{det, std::move(inverse)};
}

std::size_t rank(const CycloMatrix& m) { return row_reduce(m).pivots.size(); }

std::vector<CycloVector> nullspace(const CycloMatrix& m) {
  RowEchelon e = row_reduce(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<CycloVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    CycloVector v(cols);
    v[f] = Cyclo(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      const Cyclo& x = e.reduced(r, f);
      if (!x.is_zero()) v[e.pivots[r]] = -x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<CycloVector> solve(const CycloMatrix& m, const CycloVector& b) {
  if (b.size() != m.rows()) throw DomainError("solve: right-hand side length mismatch");
  const std::size_t cols = m.cols();
  CycloMatrix aug(m.rows(), cols + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug(i, j) = m(i, j);
    aug(i, cols) = b[i];
  }
  RowEchelon e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
  CycloVector x(cols);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, cols);
  return x;
}

std::vector<CycloVector> column_space_basis(const CycloMatrix& m) {
  RowEchelon e = row_reduce(m);
  std::vector<CycloVector> basis;
  basis.reserve(e.pivots.size());
  for (auto p : e.pivots) basis.push_back(m.column(p));
  return basis;
}

bool in_span(const std::vector<CycloVector>& basis, const CycloVector& v) {
  if (is_zero(v)) return true;
  if (basis.empty()) return false;
  return solve(CycloMatrix::from_columns(basis, v.size()), v).has_value();
}

}  // namespace ncpb
