#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncpb/algebras.hpp"
#include "ncpb/cohomology.hpp"
#include "ncpb/dynamical_system.hpp"
#include "ncpb/factor_systems.hpp"
#include "ncpb/groups.hpp"
#include "ncpb/verdict.hpp"

namespace ncpb {

/// Algebra with a homogeneous basis graded by a finite abelian group. The degree
/// zero basis vectors, in order, identify B = A_0.
struct GradedAlgebra {
  StructureAlgebra algebra;
  FinAbGroup group;
  std::vector<long long> grading;         // basis index -> group index
  std::vector<std::optional<Unit>> units;  // homogeneous unit per group index, if known

  std::vector<std::size_t> component(long long g) const;
  StructureAlgebra degree_zero() const;
  /// Coordinates in degree_zero() of an element of A_0; throws DomainError otherwise.
  CycloVector to_degree_zero(const CycloVector& x) const;
  CycloVector from_degree_zero(const CycloVector& b) const;
  bool is_homogeneous(const CycloVector& x, long long g) const;
};

/// Grading multiplicativity on all basis pairs, unit of degree 0, and every
/// stored homogeneous unit of the right degree with a correct inverse.
Verdict verify_grading(const GradedAlgebra& a);

/// sigma(g) by group index, sigma(0) = 1.
using GradedSection = std::vector<Unit>;

/// The section read off the homogeneous unit table; throws DomainError when
/// some component has no recorded unit.
GradedSection table_section(const GradedAlgebra& a);

/// A_(S, omega) on the basis b_i v_g (index g * dim B + i), multiplication
/// (b v_g)(b' v_g') = b S(g)(b') omega(g, g') v_{g+g'}. No validation.
StructureAlgebra crossed_product_algebra(const FactorSystem& fs);

/// Validates fs (DomainError if invalid), builds the graded algebra, installs the
/// unit table v_g and, when B has an involution, every S(g) is a *-map and omega is
/// unitary, the involution (b v_g)* = omega(-g, g)^{-1} S(-g)(b*) v_{-g}.
GradedAlgebra build_crossed_product(const FactorSystem& fs);

/// S(g) b = sigma(g) b sigma(g)^{-1}, omega(g, g') = sigma(g) sigma(g') sigma(g + g')^{-1}
/// on B = A_0. The result is validated.
FactorSystem extract_characteristic_class(const GradedAlgebra& a, const GradedSection& sigma);

struct GradedEquivalence {
  CycloMatrix matrix;  // columns: images of the basis of the source
  Verdict verdict;
};

/// Multiplicative, bijective, degree preserving, and the k-th degree zero basis
/// vector of `from` maps to the k-th degree zero basis vector of `to`.
Verdict verify_graded_equivalence(const GradedAlgebra& from, const GradedAlgebra& to, const CycloMatrix& m);

/// phi(b v_g) = b h(g) v_g from A_(S', omega') to A_(S, omega), where
/// (S', omega') = h.(S, omega). Throws DomainError when that relation fails.
GradedEquivalence build_equivalence(const FactorSystem& primed, const FactorSystem& base, const UnitCochain& h);

struct StandardForm {
  FactorSystem factor_system;
  GradedAlgebra standard;
  GradedEquivalence equivalence;  // a_g -> a_g sigma(g)^{-1} v_g
};

StandardForm normalize_to_standard(const GradedAlgebra& a, const GradedSection& sigma);

/// The dual action: lambda acts on A_g by the character value g(lambda).
DynamicalSystem dual_action(const GradedAlgebra& a);

struct TwistedConvolution {
  GradedAlgebra graded;  // basis b_i delta_g
  DynamicalSystem dual;
};

/// Functions Lambda^ -> A with (f * g)(l) = sum_l' f(l') alpha(l')(g(l - l')) and
/// f*(l) = alpha(l)(f(-l)*).
TwistedConvolution build_twisted_convolution(const DynamicalSystem& alpha);
/// Functions Lambda^ -> A with (f * g)(l) = sum_l' f(l') g(l - l') omega(l', l - l')
/// for a normalized mu_n-valued 2-cocycle omega, and f*(l) = conj(omega(l, -l)) f(-l)*.
TwistedConvolution build_twisted_convolution(const StructureAlgebra& a, const FinAbGroup& group, const Cochain& omega,
                                             long long n);

}  // namespace ncpb
