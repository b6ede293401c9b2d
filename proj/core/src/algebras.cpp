#include "ncpb/algebras.hpp"

#include <algorithm>
#include <numeric>

#include "ncpb/linear_algebra.hpp"

namespace ncpb {

SparseVector to_sparse(const CycloVector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  return out;
}

CycloVector to_dense(const SparseVector& v, std::size_t dim) {
  CycloVector out = zero_vector(dim);
  for (const auto& [i, c] : v) out.at(i) += c;
  return out;
}

namespace {

unsigned long conductor_of(const CycloVector& v) {
  unsigned long n = 1;
  for (const auto& c : v) n = lcm_conductor(n, c.conductor());
  return n;
}

SparseVector normalized(const SparseVector& v, std::size_t dim) {
  for (const auto& [i, c] : v)
    if (i >= dim) throw DomainError("structure constant index out of range");
  return to_sparse(to_dense(v, dim));
}

std::string label_of(const GroupElement& e) {
  std::string s = "v(";
  for (std::size_t i = 0; i < e.residues.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e.residues[i]);
  }
  return s + ")";
}

}  // namespace

StructureAlgebra::StructureAlgebra(std::vector<std::string> labels, std::vector<SparseVector> products,
                                   CycloVector unit, std::optional<CycloMatrix> involution)
    : labels_(std::move(labels)), unit_(std::move(unit)), involution_(std::move(involution)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw DomainError("algebras must have positive dimension");
  if (products.size() != n * n) throw DomainError("structure constant table must have dim^2 entries");
  if (unit_.size() != n) throw DomainError("unit vector has the wrong length");
  if (involution_ && (involution_->rows() != n || involution_->cols() != n))
    throw DomainError("involution matrix has the wrong shape");
  products_.reserve(n * n);
  for (auto& p : products) {
    products_.push_back(normalized(p, n));
    for (const auto& [k, c] : products_.back()) conductor_ = lcm_conductor(conductor_, c.conductor());
  }
  conductor_ = lcm_conductor(conductor_, conductor_of(unit_));
  if (involution_) conductor_ = lcm_conductor(conductor_, involution_->conductor());
}

StructureAlgebra StructureAlgebra::with_involution(std::optional<CycloMatrix> involution) const {
  StructureAlgebra copy = *this;
  if (involution && (involution->rows() != dim() || involution->cols() != dim()))
    throw DomainError("involution matrix has the wrong shape");
  copy.involution_ = std::move(involution);
  if (copy.involution_) copy.conductor_ = lcm_conductor(copy.conductor_, copy.involution_->conductor());
  return copy;
}

CycloVector StructureAlgebra::multiply(const CycloVector& x, const CycloVector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw DomainError("element has the wrong length");
  CycloVector out = zero_vector(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j].is_zero()) continue;
      const Cyclo xy = x[i] * y[j];
      for (const auto& [k, c] : product(i, j)) out[k] += xy * c;
    }
  }
  return out;
}

CycloVector StructureAlgebra::power(const CycloVector& x, long long k) const {
  CycloVector base = x;
  if (k < 0) {
    auto inv = inverse(x);
    if (!inv) throw NotInvertible("negative power of a non-unit");
    base = *inv;
    k = -k;
  }
  CycloVector out = unit_;
  while (k > 0) {
    if (k & 1) out = multiply(out, base);
    k >>= 1;
    if (k) base = multiply(base, base);
  }
  return out;
}

CycloVector StructureAlgebra::star(const CycloVector& x) const {
  if (!involution_) throw DomainError("algebra has no involution");
  return involution_->apply(conjugate(x));
}

CycloMatrix StructureAlgebra::left_matrix(const CycloVector& x) const {
  CycloMatrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& [k, c] : product(i, j)) m(k, j) += x[i] * c;
  }
  return m;
}

CycloMatrix StructureAlgebra::right_matrix(const CycloVector& x) const {
  CycloMatrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t i = 0; i < dim(); ++i)
      for (const auto& [k, c] : product(i, j)) m(k, i) += x[j] * c;
  }
  return m;
}

std::optional<CycloVector> StructureAlgebra::inverse(const CycloVector& x) const {
  auto y = solve(left_matrix(x), unit_);
  if (!y) return std::nullopt;
  if (multiply(*y, x) != unit_) return std::nullopt;
  return y;
}

bool StructureAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (product(i, j) != product(j, i)) return false;
  return true;
}

bool StructureAlgebra::is_central(const CycloVector& x) const {
  for (std::size_t i = 0; i < dim(); ++i) {
    CycloVector b = basis(i);
    if (multiply(x, b) != multiply(b, x)) return false;
  }
  return true;
}

AlgebraMap AlgebraMap::identity(std::size_t dim) {
  return AlgebraMap{CycloMatrix::identity(dim), CycloMatrix::identity(dim)};
}

AlgebraMap AlgebraMap::compose(const AlgebraMap& inner) const {
  return AlgebraMap{matrix * inner.matrix, inner.inverse * inverse};
}

// ---------------------------------------------------------------------------
// Builders

StructureAlgebra matrix_algebra(std::size_t m) {
  if (m == 0) throw DomainError("matrix size must be positive");
  const std::size_t n = m * m;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      labels.push_back(m < 10 ? "E" + std::to_string(i + 1) + std::to_string(j + 1)
                              : "E" + std::to_string(i + 1) + "," + std::to_string(j + 1));
  std::vector<SparseVector> products(n * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < m; ++l) products[(i * m + j) * n + (j * m + l)] = {{i * m + l, Cyclo(1)}};
  CycloVector unit = zero_vector(n);
  for (std::size_t i = 0; i < m; ++i) unit[i * m + i] = 1;
  CycloMatrix inv(n, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) inv(j * m + i, i * m + j) = 1;
  return StructureAlgebra(std::move(labels), std::move(products), std::move(unit), std::move(inv));
}

StructureAlgebra group_algebra(const FinAbGroup& group) {
  const auto n = static_cast<std::size_t>(group.order());
  std::vector<std::string> labels;
  for (const auto& g : group.elements()) labels.push_back(label_of(g));
  std::vector<SparseVector> products(n * n);
  CycloMatrix inv(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      products[a * n + b] = {{static_cast<std::size_t>(group.add_index(static_cast<long long>(a), static_cast<long long>(b))), Cyclo(1)}};
    inv(static_cast<std::size_t>(group.neg_index(static_cast<long long>(a))), a) = 1;
  }
  return StructureAlgebra(std::move(labels), std::move(products), unit_vector(n, 0), std::move(inv));
}

StructureAlgebra function_algebra(std::vector<std::string> points) {
  const std::size_t n = points.size();
  std::vector<SparseVector> products(n * n);
  for (std::size_t i = 0; i < n; ++i) products[i * n + i] = {{i, Cyclo(1)}};
  CycloVector unit(n, Cyclo(1));
  return StructureAlgebra(std::move(points), std::move(products), std::move(unit), CycloMatrix::identity(n));
}

StructureAlgebra scalar_algebra() { return function_algebra({"1"}); }

StructureAlgebra direct_sum(const StructureAlgebra& a, const StructureAlgebra& b) {
  const std::size_t da = a.dim(), db = b.dim(), n = da + db;
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(l + "+0");
  for (const auto& l : b.labels()) labels.push_back("0+" + l);
  std::vector<SparseVector> products(n * n);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) products[i * n + j] = a.product(i, j);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      SparseVector p = b.product(i, j);
      for (auto& [k, c] : p) k += da;
      products[(da + i) * n + (da + j)] = std::move(p);
    }
  CycloVector unit = a.unit();
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  std::optional<CycloMatrix> inv;
  if (a.has_involution() && b.has_involution()) {
    inv = CycloMatrix(n, n);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j) (*inv)(i, j) = (*a.involution())(i, j);
    for (std::size_t i = 0; i < db; ++i)
      for (std::size_t j = 0; j < db; ++j) (*inv)(da + i, da + j) = (*b.involution())(i, j);
  }
  return StructureAlgebra(std::move(labels), std::move(products), std::move(unit), std::move(inv));
}

StructureAlgebra tensor_product(const StructureAlgebra& a, const StructureAlgebra& b) {
  const std::size_t da = a.dim(), db = b.dim(), n = da * db;
  std::vector<std::string> labels;
  for (const auto& la : a.labels())
    for (const auto& lb : b.labels()) labels.push_back(la + "." + lb);
  std::vector<SparseVector> products(n * n);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < da; ++k)
        for (std::size_t l = 0; l < db; ++l) {
          SparseVector& out = products[(i * db + j) * n + (k * db + l)];
          for (const auto& [p, c] : a.product(i, k))
            for (const auto& [q, d] : b.product(j, l)) out.emplace_back(p * db + q, c * d);
        }
  CycloVector unit = zero_vector(n);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) unit[i * db + j] = a.unit()[i] * b.unit()[j];
  std::optional<CycloMatrix> inv;
  if (a.has_involution() && b.has_involution()) {
    inv = CycloMatrix(n, n);
    const auto& ja = *a.involution();
    const auto& jb = *b.involution();
    for (std::size_t r1 = 0; r1 < da; ++r1)
      for (std::size_t c1 = 0; c1 < da; ++c1) {
        if (ja(r1, c1).is_zero()) continue;
        for (std::size_t r2 = 0; r2 < db; ++r2)
          for (std::size_t c2 = 0; c2 < db; ++c2) (*inv)(r1 * db + r2, c1 * db + c2) = ja(r1, c1) * jb(r2, c2);
      }
  }
  return StructureAlgebra(std::move(labels), std::move(products), std::move(unit), std::move(inv));
}

StructureAlgebra StructureAlgebra::scalar_placeholder() { return scalar_algebra(); }

StructureAlgebra change_basis(const StructureAlgebra& a, const CycloMatrix& w, std::vector<std::string> labels) {
  const std::size_t n = a.dim();
  if (w.rows() != n || w.cols() != n || labels.size() != n) throw DomainError("basis change has the wrong shape");
  auto di = matrix_det_inverse(w);
  if (!di.inverse) throw DomainError("basis change matrix is singular");
  const CycloMatrix& winv = *di.inverse;
  std::vector<CycloVector> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(w.column(j));
  std::vector<SparseVector> products(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) products[i * n + j] = to_sparse(winv.apply(a.multiply(cols[i], cols[j])));
  std::optional<CycloMatrix> inv;
  if (a.has_involution()) inv = winv * (*a.involution()) * w.conjugate();
  return StructureAlgebra(std::move(labels), std::move(products), winv.apply(a.unit()), std::move(inv));
}

StructureAlgebra basis_subalgebra(const StructureAlgebra& a, const std::vector<std::size_t>& indices) {
  const std::size_t n = indices.size();
  std::vector<std::size_t> pos(a.dim(), static_cast<std::size_t>(-1));
  for (std::size_t k = 0; k < n; ++k) pos.at(indices[k]) = k;
  auto restrict = [&](const SparseVector& v) {
    SparseVector out;
    for (const auto& [i, c] : v) {
      if (pos[i] == static_cast<std::size_t>(-1)) throw DomainError("span of the basis subset is not a subalgebra");
      out.emplace_back(pos[i], c);
    }
    return out;
  };
  std::vector<std::string> labels;
  for (std::size_t i : indices) labels.push_back(a.labels()[i]);
  std::vector<SparseVector> products(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) products[i * n + j] = restrict(a.product(indices[i], indices[j]));
  CycloVector unit = to_dense(restrict(to_sparse(a.unit())), n);
  std::optional<CycloMatrix> inv;
  if (a.has_involution()) {
    inv = CycloMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      auto col = restrict(to_sparse(a.involution()->column(indices[j])));
      for (const auto& [i, c] : col) (*inv)(i, j) = c;
    }
  }
  return StructureAlgebra(std::move(labels), std::move(products), std::move(unit), std::move(inv));
}

CycloVector matrix_element(const CycloMatrix& m) {
  if (!m.is_square()) throw DomainError("matrix element must be square");
  CycloVector x(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) x[i * m.cols() + j] = m(i, j);
  return x;
}

CycloMatrix element_matrix(const CycloVector& x, std::size_t m) {
  if (x.size() != m * m) throw DomainError("element is not an m x m matrix");
  CycloMatrix out(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out(i, j) = x[i * m + j];
  return out;
}

// ---------------------------------------------------------------------------
// Verification

Verdict verify_algebra(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  const auto& lab = a.labels();
  for (std::size_t i = 0; i < n; ++i) {
    CycloVector b = a.basis(i);
    if (a.multiply(a.unit(), b) != b || a.multiply(b, a.unit()) != b)
      return Verdict::fail("unit does not act as identity on " + lab[i], {i});
  }
  CycloVector lhs(n), rhs(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::fill(lhs.begin(), lhs.end(), Cyclo());
        std::fill(rhs.begin(), rhs.end(), Cyclo());
        for (const auto& [l, c] : a.product(i, j))
          for (const auto& [m, d] : a.product(l, k)) lhs[m] += c * d;
        for (const auto& [l, c] : a.product(j, k))
          for (const auto& [m, d] : a.product(i, l)) rhs[m] += c * d;
        if (lhs != rhs)
          return Verdict::fail("associativity fails at (" + lab[i] + "," + lab[j] + "," + lab[k] + ")", {i, j, k});
      }
  if (a.has_involution()) {
    for (std::size_t i = 0; i < n; ++i) {
      CycloVector b = a.basis(i);
      if (a.star(a.star(b)) != b) return Verdict::fail("involution is not of order two on " + lab[i], {i});
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        CycloVector bi = a.basis(i), bj = a.basis(j);
        if (a.star(a.multiply(bi, bj)) != a.multiply(a.star(bj), a.star(bi)))
          return Verdict::fail("involution is not anti-multiplicative at (" + lab[i] + "," + lab[j] + ")", {i, j});
      }
  }
  return Verdict::pass();
}

Verdict verify_morphism(const StructureAlgebra& source, const StructureAlgebra& target, const CycloMatrix& m) {
  if (m.rows() != target.dim() || m.cols() != source.dim()) return Verdict::fail("map has the wrong shape");
  if (m.apply(source.unit()) != target.unit()) return Verdict::fail("map is not unital");
  std::vector<CycloVector> images;
  for (std::size_t i = 0; i < source.dim(); ++i) images.push_back(m.column(i));
  for (std::size_t i = 0; i < source.dim(); ++i)
    for (std::size_t j = 0; j < source.dim(); ++j) {
      CycloVector lhs = m.apply(to_dense(source.product(i, j), source.dim()));
      if (lhs != target.multiply(images[i], images[j]))
        return Verdict::fail("map is not multiplicative at (" + source.labels()[i] + "," + source.labels()[j] + ")",
                             {i, j});
    }
  return Verdict::pass();
}

std::optional<AlgebraMap> certify_automorphism(const StructureAlgebra& a, const CycloMatrix& m) {
  if (!verify_morphism(a, a, m)) return std::nullopt;
  auto di = matrix_det_inverse(m);
  if (!di.inverse) return std::nullopt;
  return AlgebraMap{m, *di.inverse};
}

Verdict verify_star_preserving(const StructureAlgebra& source, const StructureAlgebra& target, const CycloMatrix& m) {
  if (!source.has_involution() || !target.has_involution()) return Verdict::fail("involution missing");
  for (std::size_t i = 0; i < source.dim(); ++i) {
    CycloVector b = source.basis(i);
    if (m.apply(source.star(b)) != target.star(m.apply(b)))
      return Verdict::fail("map does not commute with the involution on " + source.labels()[i], {i});
  }
  return Verdict::pass();
}

AlgebraMap conjugation_by_unit(const StructureAlgebra& a, const CycloVector& u) {
  auto uinv = a.inverse(u);
  if (!uinv) throw NotInvertible("element is not a unit: u x = 1 has no two-sided solution");
  CycloMatrix fwd(a.dim(), a.dim()), back(a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    CycloVector b = a.basis(i);
    fwd.set_column(i, a.multiply(a.multiply(u, b), *uinv));
    back.set_column(i, a.multiply(a.multiply(*uinv, b), u));
  }
  return AlgebraMap{std::move(fwd), std::move(back)};
}

CycloVector inner_witness(const StructureAlgebra& a, const AlgebraMap& phi, std::uint64_t budget) {
  const std::size_t n = a.dim();
  CycloMatrix system(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    CycloMatrix block = a.left_matrix(phi.matrix.column(i)) - a.right_matrix(a.basis(i));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) system(i * n + r, c) = block(r, c);
  }
  auto space = nullspace(system);
  auto found = find_unit_in_subspace(a, space, {a.unit()}, budget);
  if (!found.unit) throw DomainError("no invertible solution of phi(b) u = u b; the map is not inner");
  if (conjugation_by_unit(a, found.unit->first).matrix != phi.matrix)
    throw Error("inner witness failed re-verification");
  return found.unit->first;
}

std::vector<CycloVector> center(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  CycloMatrix system(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    CycloMatrix block = a.right_matrix(a.basis(i)) - a.left_matrix(a.basis(i));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) system(i * n + r, c) = block(r, c);
  }
  std::vector<CycloVector> basis{a.unit()};
  for (auto& v : nullspace(system))
    if (!in_span(basis, v)) basis.push_back(std::move(v));
  return basis;
}

UnitSearch find_unit_in_subspace(const StructureAlgebra& a, const std::vector<CycloVector>& subspace,
                                 const std::vector<CycloVector>& candidates, std::uint64_t budget) {
  UnitSearch out;
  for (const auto& c : candidates) {
    if (subspace.empty() || !in_span(subspace, c)) continue;
    ++out.samples;
    if (auto inv = a.inverse(c)) {
      out.unit = std::make_pair(c, *inv);
      return out;
    }
  }
  const std::size_t k = subspace.size();
  if (k == 0) return out;
  const std::uint64_t per = a.dim() + 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > budget / per) throw BudgetExceeded("unit search grid", budget);
    total *= per;
  }
  std::vector<long long> t(k, 1);
  for (std::uint64_t step = 0; step < total; ++step) {
    CycloVector x = a.zero();
    for (std::size_t i = 0; i < k; ++i) axpy(x, Cyclo(t[i]), subspace[i]);
    ++out.samples;
    if (rank(a.left_matrix(x)) == a.dim()) {
      auto inv = a.inverse(x);
      if (!inv) throw Error("full-rank left multiplication without a two-sided inverse");
      out.unit = std::make_pair(std::move(x), std::move(*inv));
      return out;
    }
    for (std::size_t i = k; i-- > 0;) {
      if (++t[i] <= static_cast<long long>(per)) break;
      t[i] = 1;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Spectrum

bool cyclo_less(const Cyclo& a, const Cyclo& b) {
  const unsigned long n = lcm_conductor(a.conductor(), b.conductor());
  auto ca = a.lifted(n).dense_coeffs();
  auto cb = b.lifted(n).dense_coeffs();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

Cyclo FiniteSpectrum::evaluate(std::size_t point, const CycloVector& x) const {
  const CycloVector& c = points.at(point);
  if (c.size() != x.size()) throw DomainError("element has the wrong length");
  Cyclo out;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero() && !x[i].is_zero()) out += c[i] * x[i];
  return out;
}

namespace {

// Rows c of span(rows) with c L = lambda c.
std::vector<CycloVector> left_eigen_rows(const std::vector<CycloVector>& rows, const CycloMatrix& l,
                                         const Cyclo& lambda) {
  const std::size_t n = l.rows();
  CycloMatrix shifted = l;
  for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lambda;
  CycloMatrix w = CycloMatrix::from_rows(rows);
  CycloMatrix m = w * shifted;
  std::vector<CycloVector> out;
  for (const auto& coeffs : nullspace(m.transpose())) {
    CycloVector c = zero_vector(n);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (!coeffs[r].is_zero()) axpy(c, coeffs[r], rows[r]);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

FiniteSpectrum spectrum(const StructureAlgebra& a, unsigned long conductor) {
  if (!a.is_commutative()) throw DomainError("spectrum requires a commutative algebra");
  const std::size_t n = a.dim();
  const unsigned long field = lcm_conductor(conductor, a.conductor());

  std::vector<Cyclo> candidates{Cyclo()};
  auto add_candidate = [&](Cyclo c) {
    if (std::find(candidates.begin(), candidates.end(), c) == candidates.end()) candidates.push_back(std::move(c));
  };
  for (unsigned long k = 0; k < field; ++k) add_candidate(Cyclo::zeta(field, static_cast<long long>(k)));
  for (long long v = -static_cast<long long>(n); v <= static_cast<long long>(n); ++v) add_candidate(Cyclo(v));

  std::vector<std::vector<CycloVector>> pieces(1);
  for (std::size_t i = 0; i < n; ++i) pieces[0].push_back(unit_vector(n, i));

  for (std::size_t i = 0; i < n; ++i) {
    const CycloMatrix l = a.left_matrix(a.basis(i));
    std::vector<std::vector<CycloVector>> next;
    for (const auto& w : pieces) {
      std::size_t found = 0;
      for (const auto& lambda : candidates) {
        auto part = left_eigen_rows(w, l, lambda);
        if (part.empty()) continue;
        found += part.size();
        next.push_back(std::move(part));
        if (found == w.size()) break;
      }
      if (found != w.size())
        throw DomainError("algebra does not split over Q(zeta_" + std::to_string(field) +
                          ") with the searched eigenvalues");
    }
    pieces = std::move(next);
  }

  FiniteSpectrum out;
  for (auto& w : pieces) {
    if (w.size() != 1) throw DomainError("joint eigenspace of dimension > 1: algebra is not split semisimple");
    CycloVector c = std::move(w[0]);
    Cyclo at_unit;
    for (std::size_t k = 0; k < n; ++k) at_unit += c[k] * a.unit()[k];
    if (at_unit.is_zero()) throw DomainError("joint eigenvector vanishes on the unit");
    c = at_unit.inverse() * c;
    out.points.push_back(std::move(c));
  }
  std::sort(out.points.begin(), out.points.end(), [](const CycloVector& x, const CycloVector& y) {
    return std::lexicographical_compare(y.begin(), y.end(), x.begin(), x.end(), cyclo_less);
  });
  return out;
}

}  // namespace ncpb
