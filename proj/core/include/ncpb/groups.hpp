#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "ncpb/exact_scalars.hpp"

namespace ncpb {

/// Residue vector of an element of C_{n_1} x ... x C_{n_k}; additive notation.
struct GroupElement {
  std::vector<long long> residues;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Character c paired with g as exp(2 pi i sum_i c_i g_i / n_i). Characters of a
/// product of cyclic groups are identified with elements of the group itself.
struct Character {
  std::vector<long long> residues;
  friend bool operator==(const Character&, const Character&) = default;
  friend auto operator<=>(const Character&, const Character&) = default;
};

/// Finite abelian group C_{n_1} x ... x C_{n_k}, stored exactly as given (the
/// orders need not form a divisor chain). k = 0 is the trivial group.
///
/// Elements are indexed in lexicographic order of residue vectors, so index 0 is
/// the identity and the last coordinate varies fastest.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  explicit FinAbGroup(std::vector<long long> orders);

  const std::vector<long long>& orders() const noexcept { return orders_; }
  std::size_t rank() const noexcept { return orders_.size(); }
  long long order() const noexcept { return order_; }
  long long exponent() const noexcept { return exponent_; }
  bool is_trivial() const noexcept { return order_ == 1; }
  bool is_cyclic_presentation() const noexcept { return orders_.size() <= 1; }

  GroupElement identity() const { return GroupElement{std::vector<long long>(rank(), 0)}; }
  GroupElement element(std::vector<long long> residues) const;  // reduces mod n_i
  GroupElement element_at(long long index) const;
  long long index_of(const GroupElement& g) const;
  std::vector<GroupElement> elements() const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const { return add(a, neg(b)); }
  GroupElement scale(long long k, const GroupElement& a) const;
  long long element_order(const GroupElement& a) const;

  /// Index-level group law, for tight loops.
  long long add_index(long long a, long long b) const;
  long long neg_index(long long a) const;

  void check(const GroupElement& g) const;  // throws DomainError on a shape mismatch
  std::string to_string() const;            // e.g. "C2xC4", "1" for trivial

  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) { return a.orders_ == b.orders_; }

 private:
  std::vector<long long> orders_;
  std::vector<long long> strides_;
  long long order_ = 1;
  long long exponent_ = 1;
};

/// sum_i c_i g_i / n_i in Q/Z.
RootOfUnity dual_pairing(const FinAbGroup& group, const Character& c, const GroupElement& g);

/// The standard basis e_i and the characters with residues e_i.
std::pair<std::vector<GroupElement>, std::vector<Character>> canonical_generators(const FinAbGroup& group);

struct SubgroupData {
  FinAbGroup ambient;
  std::vector<GroupElement> generators;
  std::vector<GroupElement> elements;  // sorted by index in the ambient group

  long long order() const { return static_cast<long long>(elements.size()); }
  bool contains(const GroupElement& g) const;
};

SubgroupData subgroup_closure(const FinAbGroup& group, const std::vector<GroupElement>& generators);
SubgroupData whole_group(const FinAbGroup& group);
/// Subgroup with the given element set (which must be closed); generators are
/// picked greedily in index order, skipping elements already generated.
SubgroupData subgroup_from_elements(const FinAbGroup& group, const std::vector<GroupElement>& elements);

/// Invariant factors of ambient / sub (Smith normal form on the relation matrix).
std::vector<long long> quotient_invariants(const SubgroupData& sub);

/// Invariant factors of outer / inner for subgroups inner <= outer of one group.
std::vector<long long> subquotient_invariants(const SubgroupData& outer, const SubgroupData& inner);

/// Invariant factors of a finite abelian group of the given order, recovered from
/// killed_by(d) = #{x : d x = 0} at prime powers d.
std::vector<long long> invariants_from_torsion_counts(long long order,
                                                      const std::function<long long(long long)>& killed_by);

}  // namespace ncpb
