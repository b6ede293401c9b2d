#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncpb/algebras.hpp"
#include "ncpb/crossed_products.hpp"
#include "ncpb/dynamical_system.hpp"
#include "ncpb/factor_systems.hpp"
#include "ncpb/groups.hpp"
#include "ncpb/verdict.hpp"

namespace ncpb {

/// A = sum of A_phi over characters phi, indexed like group elements (a character
/// with residues c is stored at the index of the element with residues c).
struct IsotypicDecomposition {
  std::vector<CycloMatrix> projections;
  std::vector<std::vector<CycloVector>> bases;
  unsigned long conductor = 1;

  const std::vector<CycloVector>& component(long long phi) const { return bases.at(static_cast<std::size_t>(phi)); }
  std::vector<std::size_t> dimensions() const;
};

/// P_phi = |Lambda|^{-1} sum_lambda conj(phi(lambda)) alpha(lambda). conductor = 0 picks
/// lcm(exponent, conductor of A); otherwise it must be a multiple of the exponent.
IsotypicDecomposition fourier_decompose(const DynamicalSystem& ds, unsigned long conductor = 0);

/// Dimension count, P_phi fixing its own basis and killing the others, sum of
/// projections = 1, and A_phi A_psi inside A_{phi + psi} on basis vectors.
Verdict verify_decomposition(const DynamicalSystem& ds, const IsotypicDecomposition& dec);

/// Witnesses for the standard generators e_i of Lambda, with a_i in A_{e_i}.
struct TrivialityCertificate {
  std::vector<GroupElement> generators;
  std::vector<Character> characters;
  std::vector<long long> orders;
  std::vector<Unit> witnesses;
  std::vector<std::string> transcript;
};

struct CertifyOptions {
  std::vector<std::optional<CycloVector>> witnesses;  // per generator; missing or nullopt means search
  std::vector<CycloVector> candidates;                // tried before the component basis
  long long torsion_order = 0;                        // scalars mu_N rescale candidates; 0 means exponent
  std::uint64_t budget = kDefaultBudget;
};

struct CertifyReport {
  bool ok = false;
  std::optional<TrivialityCertificate> certificate;
  std::vector<std::string> failures;  // one per failed generator
  std::vector<std::string> transcript;
};

/// Supplied witnesses are checked as given. Otherwise the candidates, then the
/// component basis, then a unit from find_unit_in_subspace, each times zeta_N^j for
/// j = 0..N-1, are tried in order and the first with a^{n_i} = 1 is kept. A
/// candidate with c^{n_i} = q * (root of unity) for a rational n_i-th power q is
/// first divided by q^{1/n_i}.
CertifyReport certify_trivial(const DynamicalSystem& ds, const IsotypicDecomposition& dec,
                              const CertifyOptions& options = {});

/// Membership alpha(lambda)(a_i) = e_i(lambda) a_i for all lambda, the stored inverse, a_i^{n_i} = 1.
Verdict verify_certificate(const DynamicalSystem& ds, const TrivialityCertificate& cert);

/// sigma_i(l) = a_i^l for l = 0..n_i-1.
struct SplitWitness {
  std::vector<GroupElement> generators;
  std::vector<std::vector<Unit>> sections;
};

/// Throws DomainError when the certificate is invalid.
SplitWitness split_witness(const DynamicalSystem& ds, const TrivialityCertificate& cert);
/// Homomorphism property and degrees of every sigma_i.
Verdict verify_split_witness(const DynamicalSystem& ds, const SplitWitness& split);
/// a_i := sigma_i(1); throws DomainError when the split witness is invalid.
TrivialityCertificate certificate_from_split(const DynamicalSystem& ds, const SplitWitness& split);

struct CentralNormalization {
  Unit witness;                   // a b^{-1}
  std::vector<CycloVector> a_powers;  // a^k, k = 0..n-1
  std::vector<CycloVector> b_powers;
};

/// For a in A_{e_i} and b in A_0 with a^n = b^n, n = order of e_i, and A_0 central.
/// Throws DomainError when a precondition fails.
CentralNormalization central_normalize(const DynamicalSystem& ds, const IsotypicDecomposition& dec, std::size_t i,
                                       const CycloVector& a, const CycloVector& b);

/// Lambda acting on the characters of a commutative A by chi.lambda = chi o alpha(lambda).
struct SpectrumAction {
  FiniteSpectrum spectrum;
  std::vector<std::vector<std::size_t>> table;  // table[lambda][x] = x.lambda
  bool free = false;
  std::optional<std::pair<std::size_t, long long>> fixed_point;  // (x, lambda) with x.lambda = x, lambda != 0
  std::vector<std::size_t> orbit_of;  // orbits numbered by their smallest point
  std::size_t orbit_count = 0;
};

SpectrumAction spectrum_action(const DynamicalSystem& ds, unsigned long conductor = 0);

/// x -> (orbit of x, (f_1(x), ..., f_k(x))) with f_i(x) = chi_x(a_i) read in C_{n_i}.
struct CoveringTrivialization {
  std::vector<std::size_t> orbit_of;
  std::vector<GroupElement> fiber;
  Verdict verdict;  // values are n_i-th roots of unity, the map is bijective and equivariant
};

CoveringTrivialization trivialize_covering(const DynamicalSystem& ds, const SpectrumAction& action,
                                           const TrivialityCertificate& cert);

/// A in the basis of concatenated isotypic bases, graded by the character group.
struct GradedModel {
  GradedAlgebra graded;
  CycloMatrix to_graded;    // coordinates of A -> coordinates of the model
  CycloMatrix from_graded;
};

/// The unit table is filled with the first unit found in each component.
GradedModel graded_from_isotypic(const DynamicalSystem& ds, const IsotypicDecomposition& dec,
                                 std::uint64_t budget = kDefaultBudget);

struct ClockShift {
  long long n = 1;
  CycloMatrix r;  // diag(1, zeta, ..., zeta^{n-1})
  CycloMatrix s;  // e_j -> e_{j+1}
  DynamicalSystem system;  // (1,0) acts by conjugation with S, (0,1) by conjugation with R
  IsotypicDecomposition decomposition;
  CertifyReport report;  // witnesses R* and S
  std::vector<std::pair<std::string, bool>> checks;
  bool ok() const;
};

ClockShift clock_shift_system(long long n);

struct SplitTest {
  bool split = false;
  std::optional<Unit> witness;  // homogeneous unit of degree 1 and order n_i in the restricted crossed product
  GradedAlgebra restricted;
  CertifyReport report;
};

/// Restricts (S, omega) to <e_i> and searches the restricted crossed product for a
/// homogeneous unit a of degree 1 with a^{n_i} = 1 among b v_1, b in the unit
/// candidates of B (1, basis units, extra), scaled by mu_N.
SplitTest restrict_and_test_split(const FactorSystem& fs, std::size_t i, long long torsion_order = 0,
                                  const std::vector<CycloVector>& extra_candidates = {},
                                  std::uint64_t budget = kDefaultBudget);

}  // namespace ncpb
