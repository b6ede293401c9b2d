#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncpb/groups.hpp"
#include "ncpb/verdict.hpp"

namespace ncpb {

/// Finite abelian group (written additively) on which G acts by automorphisms.
/// A carrier flagged as roots of unity is C_N read as mu_N: residue k stands for
/// exp(2 pi i k / N).
struct CoeffModule {
  FinAbGroup carrier;
  FinAbGroup acting;
  std::vector<std::vector<long long>> action;  // action[g][x] = g.x by indices; empty means trivial
  bool roots_of_unity = false;

  static CoeffModule mu(long long n, FinAbGroup acting);
  static CoeffModule trivial(FinAbGroup carrier, FinAbGroup acting);
  /// images[i] is the integer matrix of the generator e_i of `acting` on carrier
  /// residues (column j = image of the j-th carrier generator). Throws DomainError
  /// unless this defines an action by automorphisms.
  static CoeffModule from_generator_matrices(FinAbGroup carrier, FinAbGroup acting,
                                             const std::vector<std::vector<std::vector<long long>>>& images);

  long long size() const { return carrier.order(); }
  bool trivial_action() const { return action.empty(); }
  long long act(long long g, long long x) const { return action.empty() ? x : action[g][x]; }
  std::string name() const;
  /// Each g acts bijectively and additively, 0 acts trivially, (g+h).x = g.(h.x).
  Verdict verify() const;
};

/// Total map G^p -> carrier by element indices; argument tuples are indexed with
/// the first argument most significant. Normalized cochains vanish whenever an
/// argument is the identity.
struct Cochain {
  int degree = 0;
  std::vector<long long> values;
  friend bool operator==(const Cochain&, const Cochain&) = default;
};

class CochainComplex {
 public:
  explicit CochainComplex(CoeffModule module);

  const FinAbGroup& group() const noexcept { return m_.acting; }
  const CoeffModule& module() const noexcept { return m_; }

  std::size_t table_size(int degree) const;
  std::size_t index(const std::vector<long long>& args) const;
  std::vector<long long> arguments(int degree, std::size_t index) const;

  Cochain zero(int degree) const;
  Cochain add(const Cochain& a, const Cochain& b) const;
  Cochain neg(const Cochain& a) const;
  Cochain scale(long long k, const Cochain& a) const;
  bool is_normalized(const Cochain& c) const;
  /// Shape check plus normalization; throws DomainError.
  void check(const Cochain& c) const;

  /// d h for degree 1 or 2 (DomainError otherwise):
  ///   (dh)(g,g') = h(g) + g.h(g') - h(g+g')
  ///   (dw)(g,g',g'') = g.w(g',g'') + w(g,g'+g'') - w(g+g',g'') - w(g,g')
  Cochain coboundary(const Cochain& h) const;
  /// d w = 0, with the first violating argument tuple as witness.
  Verdict is_cocycle(const Cochain& w) const;

 private:
  CoeffModule m_;
};

struct CohomologyResult {
  std::vector<long long> factors;  // invariant factors, ascending, all > 1
  std::string method;               // bruteforce | snf | structural | circle
  std::vector<Cochain> representatives;   // cocycles whose classes generate H^2 (bruteforce only)
  std::vector<long long> representative_orders;
  std::uint64_t cocycles = 0;       // |Z^2| (bruteforce only)
  std::uint64_t coboundaries = 0;   // |B^2| (bruteforce only)

  long long order() const;
};

/// Exhaustive: backtracking over normalized 2-cochains with forced-value
/// propagation through the cocycle identities, then |Z^2|/|B^2| with B^2
/// enumerated from all of C^1. Invariant factors come from counting classes
/// killed by each prime power. The budget caps search steps plus |C^1|; over it,
/// BudgetExceeded is thrown.
CohomologyResult h2_bruteforce(const CoeffModule& module, std::uint64_t budget = kDefaultBudget);

/// H^2(G, mu_m) with trivial action from the Smith normal form of the integer
/// cochain complex.
CohomologyResult h2_snf(const FinAbGroup& group, long long m);

/// m-torsion of H^2(G, C^x) = H^3(G, Z), read off the torsion of the integer
/// coboundary C^2 -> C^3 (m = 0: the whole group). These are the classes of
/// mu_m-valued cocycles up to C^x-valued coboundaries.
CohomologyResult h2_circle(const FinAbGroup& group, long long m = 0);

/// Cyclic G = C_n with any action: invariants of Lambda^{C_n} / N Lambda.
/// Other groups, trivial action only: the universal-coefficient count
/// sum_i Z/(n_i, l) + sum_{i<j} Z/(n_i, n_j, l) over the cyclic summands Z/l of the carrier.
CohomologyResult h2_twisted_structural(const CoeffModule& module);

/// Some h in C^{p-1} with d h = w (w of degree 2 or 3), or nullopt when the
/// exhaustive search proves none exists. Throws BudgetExceeded.
std::optional<Cochain> class_is_trivial(const CoeffModule& module, const Cochain& w,
                                        std::uint64_t budget = kDefaultBudget);

/// Same question for a mu_m-valued 2-cocycle with trivial action read in C^x:
/// a trivializing C^x-valued h can always be taken mu_{m e}-valued (e = exponent
/// of G), so the search runs there. Returns h as residues mod m e.
std::optional<Cochain> circle_class_is_trivial(const FinAbGroup& group, long long m, const Cochain& w,
                                               std::uint64_t budget = kDefaultBudget);

/// The bilinear cocycle w(g, g') = sum_{i,j} k_{ij} g_i g'_j m / gcd(n_i, n_j) in
/// Z/m = mu_m. Requires gcd(n_i, n_j) | m wherever k_{ij} != 0.
Cochain bilinear_cocycle(const FinAbGroup& group, long long m, const std::vector<std::vector<long long>>& k);

}  // namespace ncpb
