#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncpb/algebras.hpp"
#include "ncpb/cohomology.hpp"
#include "ncpb/groups.hpp"
#include "ncpb/verdict.hpp"

namespace ncpb {

/// A unit of some algebra together with its certified inverse.
struct Unit {
  CycloVector value;
  CycloVector inverse;
  friend bool operator==(const Unit& a, const Unit& b) { return a.value == b.value; }
};

/// Throws NotInvertible.
Unit make_unit(const StructureAlgebra& b, const CycloVector& x);
Unit one_unit(const StructureAlgebra& b);
/// zeta_N^k * 1_B
Unit scalar_unit(const StructureAlgebra& b, long long k, long long n);

/// S: G -> Aut(B), tabulated by group index. Not required to be a homomorphism.
struct OuterAction {
  FinAbGroup group;
  StructureAlgebra algebra;
  std::vector<AlgebraMap> maps;

  const AlgebraMap& at(long long g) const { return maps.at(static_cast<std::size_t>(g)); }
  bool is_homomorphism() const;
  friend bool operator==(const OuterAction& a, const OuterAction& b) {
    return a.group == b.group && a.maps == b.maps;
  }
};

OuterAction trivial_outer_action(const FinAbGroup& g, const StructureAlgebra& b);
/// S(sum r_i e_i) = S(e_1)^{r_1} ... S(e_k)^{r_k}. Throws DomainError when a
/// generator image is not an automorphism or its order does not divide n_i.
OuterAction homomorphic_action(const FinAbGroup& g, const StructureAlgebra& b,
                               const std::vector<CycloMatrix>& generator_images);
/// Full table by group index; entry 0 must be the identity.
OuterAction outer_action_from_table(const FinAbGroup& g, const StructureAlgebra& b,
                                    const std::vector<CycloMatrix>& table);

Verdict verify_outer_action(const OuterAction& s);

/// omega indexed by a * |G| + b. Need not satisfy d_S omega = 1 until validated.
struct FactorSystem {
  OuterAction action;
  std::vector<Unit> omega;

  const Unit& at(long long a, long long b) const {
    return omega.at(static_cast<std::size_t>(a * action.group.order() + b));
  }
  friend bool operator==(const FactorSystem& a, const FactorSystem& b) {
    return a.action == b.action && a.omega == b.omega;
  }
};

FactorSystem trivial_factor_system(const OuterAction& s);
/// omega(g, g') = zeta_n^{w(g, g')} 1_B for a normalized mu_n-valued 2-cochain w.
FactorSystem scalar_factor_system(const OuterAction& s, const Cochain& w, long long n);

/// Normalization, stored inverses, delta_S = C_B o omega, d_S omega = 1, in that order.
Verdict validate_factor_system(const FactorSystem& fs);
/// Only normalization and delta_S = C_B o omega.
Verdict validate_compatible_pair(const FactorSystem& fs);

/// The 3-cochain d_S omega as algebra elements, indexed like Cochain tables.
std::vector<CycloVector> d_omega(const FactorSystem& fs);

/// h(0) = 1.
using UnitCochain = std::vector<Unit>;

UnitCochain trivial_unit_cochain(const OuterAction& s);
UnitCochain multiply_cochains(const StructureAlgebra& b, const UnitCochain& left, const UnitCochain& right);
UnitCochain invert_cochain(const UnitCochain& h);
/// d_S h(k, l) = h(k) S(k)(h(l)) h(k+l)^{-1}, indexed k * |G| + l.
std::vector<CycloVector> d_unit_cochain(const OuterAction& s, const UnitCochain& h);

/// h.S = (C_B o h) S and (h *_S omega)(g, g') = h(g) S(g)(h(g')) omega(g, g') h(g + g')^{-1}.
FactorSystem act_unit_cochain(const UnitCochain& h, const FactorSystem& fs);
bool stabilizer_check(const UnitCochain& h, const FactorSystem& fs);

/// Reads a scalar multiple of 1_B as a root of unity; nullopt otherwise.
std::optional<RootOfUnity> scalar_root(const StructureAlgebra& b, const CycloVector& x);

enum class SearchStatus { found, absent, refused };

struct KernelEquivalence {
  SearchStatus status = SearchStatus::absent;
  UnitCochain witness;             // S' = (C_B o h) S
  long long torsion_order = 1;     // d_S h is read in mu_N
  Cochain d_witness;               // d_S h as residues mod N
  std::optional<Cochain> trivializer;  // t with d t = d_S h
  UnitCochain corrected;           // h zeta^{-t}: same S', and d_S h == 1
  std::string detail;
};

/// S ~ S' for cyclic G: a unit cochain h with S' = (C_B o h) S and [d_S h] = 0,
/// checked with d_S h read in mu_N (N = torsion_order, or automatic when 0).
/// For homomorphic S, S' the witness u is rescaled so that its norm is a root of
/// unity: by a rational n-th root when one exists, else by candidates s / tr L_u.
KernelEquivalence kernel_equivalent(const OuterAction& s, const OuterAction& s_prime, long long torsion_order = 0,
                                    std::uint64_t budget = kDefaultBudget);

struct Obstruction {
  SearchStatus status = SearchStatus::refused;  // found = class trivial, absent = no mu_N trivialization
  std::optional<FactorSystem> pair;             // (S, omega) with delta_S = C_B o omega
  long long torsion_order = 1;
  std::optional<Cochain> values;                // d_S omega in mu_N
  std::optional<Cochain> witness;               // k with d k = d_S omega
  std::optional<FactorSystem> corrected;        // (S, omega zeta^{-k}), validated
  std::string detail;
};

/// nu(S) = [d_S omega]. Without a supplied omega one is constructed: omega = 1 when
/// S is a homomorphism, u_g u_g' u_{g+g'}^{-1} when every S(g) is inner by u_g,
/// otherwise pairwise inner witnesses of delta_S.
Obstruction nu_obstruction(const OuterAction& s, const std::optional<std::vector<Unit>>& omega = std::nullopt,
                           long long torsion_order = 0, std::uint64_t budget = kDefaultBudget);

/// Restriction of (S, omega) to the cyclic subgroup generated by e_i.
FactorSystem restrict_to_generator(const FactorSystem& fs, std::size_t i);

}  // namespace ncpb
