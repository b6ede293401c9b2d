#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncpb/exact_scalars.hpp"
#include "ncpb/groups.hpp"
#include "ncpb/verdict.hpp"

namespace ncpb {

/// Sparse coordinate vector: (basis index, nonzero coefficient), sorted by index.
using SparseVector = std::vector<std::pair<std::size_t, Cyclo>>;

SparseVector to_sparse(const CycloVector& v);
CycloVector to_dense(const SparseVector& v, std::size_t dim);

/// Finite-dimensional unital algebra over Q(zeta_N) given by structure constants.
/// The involution, when present, is conjugate-linear: x* = J conj(x), with J the
/// stored matrix whose column i is b_i*.
class StructureAlgebra {
 public:
  StructureAlgebra() : StructureAlgebra(scalar_placeholder()) {}
  /// products[i * dim + j] = b_i b_j. Throws DomainError on dim = 0 or shape errors.
  StructureAlgebra(std::vector<std::string> labels, std::vector<SparseVector> products, CycloVector unit,
                   std::optional<CycloMatrix> involution = std::nullopt);

  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const CycloVector& unit() const noexcept { return unit_; }
  const SparseVector& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  const std::optional<CycloMatrix>& involution() const noexcept { return involution_; }
  bool has_involution() const noexcept { return involution_.has_value(); }
  /// Least common conductor of structure constants, unit, and involution.
  unsigned long conductor() const noexcept { return conductor_; }

  CycloVector basis(std::size_t i) const { return unit_vector(dim(), i); }
  CycloVector zero() const { return zero_vector(dim()); }
  CycloVector scalar(const Cyclo& c) const { return c * unit_; }

  CycloVector multiply(const CycloVector& x, const CycloVector& y) const;
  CycloVector power(const CycloVector& x, long long k) const;  // k < 0 needs a unit
  CycloVector star(const CycloVector& x) const;                 // requires an involution

  /// Matrix of y -> x y (columns x b_j).
  CycloMatrix left_matrix(const CycloVector& x) const;
  /// Matrix of y -> y x.
  CycloMatrix right_matrix(const CycloVector& x) const;

  /// Two-sided inverse if x is a unit (solved from x y = 1, then checked y x = 1).
  std::optional<CycloVector> inverse(const CycloVector& x) const;
  bool is_unit(const CycloVector& x) const { return inverse(x).has_value(); }
  bool is_commutative() const;
  bool is_central(const CycloVector& x) const;

  StructureAlgebra with_involution(std::optional<CycloMatrix> involution) const;

 private:
  static StructureAlgebra scalar_placeholder();
  std::vector<std::string> labels_;
  std::vector<SparseVector> products_;
  CycloVector unit_;
  std::optional<CycloMatrix> involution_;
  unsigned long conductor_ = 1;
};

/// Algebra automorphism with its verified inverse.
struct AlgebraMap {
  CycloMatrix matrix;
  CycloMatrix inverse;

  static AlgebraMap identity(std::size_t dim);
  CycloVector apply(const CycloVector& x) const { return matrix.apply(x); }
  AlgebraMap compose(const AlgebraMap& inner) const;  // this after inner
  AlgebraMap inverted() const { return AlgebraMap{inverse, matrix}; }
  friend bool operator==(const AlgebraMap& a, const AlgebraMap& b) { return a.matrix == b.matrix; }
};

// Builders.
StructureAlgebra matrix_algebra(std::size_t m);                       // basis E_ij at i*m+j; conjugate transpose
StructureAlgebra group_algebra(const FinAbGroup& group);              // basis v_g by group index; v_g* = v_{-g}
StructureAlgebra function_algebra(std::vector<std::string> points);   // pointwise product; f* = conj(f)
StructureAlgebra scalar_algebra();                                     // the ground field itself
StructureAlgebra direct_sum(const StructureAlgebra& a, const StructureAlgebra& b);
StructureAlgebra tensor_product(const StructureAlgebra& a, const StructureAlgebra& b);  // index i*dim(b)+j

/// The same algebra in the basis given by the columns of w (which must be
/// invertible); coordinates transform by w^{-1}.
StructureAlgebra change_basis(const StructureAlgebra& a, const CycloMatrix& w, std::vector<std::string> labels);

/// Subalgebra spanned by the listed basis vectors; throws DomainError if the span
/// is not closed under multiplication or misses the unit.
StructureAlgebra basis_subalgebra(const StructureAlgebra& a, const std::vector<std::size_t>& indices);

/// Matrix m x m embedded as an element of matrix_algebra(m).
CycloVector matrix_element(const CycloMatrix& m);
CycloMatrix element_matrix(const CycloVector& x, std::size_t m);

/// Associativity and unitality on all basis triples/pairs; involution axioms when present.
Verdict verify_algebra(const StructureAlgebra& a);

/// m is multiplicative and unital from source to target, on all basis pairs.
Verdict verify_morphism(const StructureAlgebra& source, const StructureAlgebra& target, const CycloMatrix& m);
/// m is a morphism of a to itself with an inverse; returns the certified map.
std::optional<AlgebraMap> certify_automorphism(const StructureAlgebra& a, const CycloMatrix& m);
/// m commutes with the involution: m(x*) = m(x)*.
Verdict verify_star_preserving(const StructureAlgebra& source, const StructureAlgebra& target, const CycloMatrix& m);

/// x -> u x u^{-1}. Throws NotInvertible if u is not a unit.
AlgebraMap conjugation_by_unit(const StructureAlgebra& a, const CycloVector& u);

/// Unit u with phi = conjugation by u, from the nullspace of phi(b_i) u = u b_i.
/// Throws DomainError if no invertible solution exists.
CycloVector inner_witness(const StructureAlgebra& a, const AlgebraMap& phi, std::uint64_t budget = kDefaultBudget);

/// Basis of the center, unit first.
std::vector<CycloVector> center(const StructureAlgebra& a);

struct UnitSearch {
  std::optional<std::pair<CycloVector, CycloVector>> unit;  // (u, u^{-1})
  std::size_t samples = 0;                                  // determinant evaluations performed
};

/// Searches span(subspace) for a unit: candidates inside the span first, then the
/// generic element sum t_i v_i on the grid {1, ..., dim(a)+1}^k in lexicographic
/// order. det(L_x) has degree dim(a), so a zero on the whole grid proves that no
/// unit exists. Throws BudgetExceeded if the grid is larger than the budget.
UnitSearch find_unit_in_subspace(const StructureAlgebra& a, const std::vector<CycloVector>& subspace,
                                 const std::vector<CycloVector>& candidates = {},
                                 std::uint64_t budget = kDefaultBudget);

/// Characters of a commutative split semisimple algebra, each a coordinate
/// functional chi(x) = sum_i c_i x_i.
struct FiniteSpectrum {
  std::vector<CycloVector> points;
  Cyclo evaluate(std::size_t point, const CycloVector& x) const;
};

/// Simultaneous left eigenvectors of the regular representation. Eigenvalues are
/// looked for among 0, the conductor-th roots of unity, and the integers in
/// [-dim, dim]; the working conductor is lcm(conductor, a.conductor()). Throws
/// DomainError when the joint eigenspaces do not split into dim lines.
FiniteSpectrum spectrum(const StructureAlgebra& a, unsigned long conductor = 1);

/// Total order on field elements used for deterministic tie-breaking.
bool cyclo_less(const Cyclo& a, const Cyclo& b);

}  // namespace ncpb
