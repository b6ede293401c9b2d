#include "ncpb/groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "ncpb/integer_matrix.hpp"

namespace ncpb {

namespace {

long long mod(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

FinAbGroup::FinAbGroup(std::vector<long long> orders) : orders_(std::move(orders)) {
  strides_.assign(orders_.size(), 1);
  for (std::size_t i = orders_.size(); i-- > 0;) {
    if (orders_[i] < 1) throw DomainError("cyclic factor orders must be positive");
    strides_[i] = order_;
    order_ *= orders_[i];
    exponent_ = std::lcm(exponent_, orders_[i]);
  }
}

void FinAbGroup::check(const GroupElement& g) const {
  if (g.residues.size() != rank()) throw DomainError("group element has the wrong number of residues");
}

GroupElement FinAbGroup::element(std::vector<long long> residues) const {
  GroupElement g{std::move(residues)};
  check(g);
  for (std::size_t i = 0; i < rank(); ++i) g.residues[i] = mod(g.residues[i], orders_[i]);
  return g;
}

GroupElement FinAbGroup::element_at(long long index) const {
  if (index < 0 || index >= order_) throw DomainError("group element index out of range");
  GroupElement g{std::vector<long long>(rank())};
  for (std::size_t i = 0; i < rank(); ++i) g.residues[i] = (index / strides_[i]) % orders_[i];
  return g;
}

long long FinAbGroup::index_of(const GroupElement& g) const {
  check(g);
  long long idx = 0;
  for (std::size_t i = 0; i < rank(); ++i) idx += mod(g.residues[i], orders_[i]) * strides_[i];
  return idx;
}

std::vector<GroupElement> FinAbGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (long long i = 0; i < order_; ++i) out.push_back(element_at(i));
  return out;
}

GroupElement FinAbGroup::add(const GroupElement& a, const GroupElement& b) const {
  check(a);
  check(b);
  GroupElement g{std::vector<long long>(rank())};
  for (std::size_t i = 0; i < rank(); ++i) g.residues[i] = mod(a.residues[i] + b.residues[i], orders_[i]);
  return g;
}

GroupElement FinAbGroup::neg(const GroupElement& a) const {
  check(a);
  GroupElement g{std::vector<long long>(rank())};
  for (std::size_t i = 0; i < rank(); ++i) g.residues[i] = mod(-a.residues[i], orders_[i]);
  return g;
}

GroupElement FinAbGroup::scale(long long k, const GroupElement& a) const {
  check(a);
  GroupElement g{std::vector<long long>(rank())};
  for (std::size_t i = 0; i < rank(); ++i) g.residues[i] = mod(mod(k, orders_[i]) * a.residues[i], orders_[i]);
  return g;
}

long long FinAbGroup::element_order(const GroupElement& a) const {
  check(a);
  long long o = 1;
  for (std::size_t i = 0; i < rank(); ++i) {
    long long r = mod(a.residues[i], orders_[i]);
    o = std::lcm(o, orders_[i] / std::gcd(orders_[i], r));
  }
  return o;
}

long long FinAbGroup::add_index(long long a, long long b) const {
  long long idx = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    long long r = ((a / strides_[i]) % orders_[i] + (b / strides_[i]) % orders_[i]) % orders_[i];
    idx += r * strides_[i];
  }
  return idx;
}

long long FinAbGroup::neg_index(long long a) const {
  long long idx = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    long long r = mod(-((a / strides_[i]) % orders_[i]), orders_[i]);
    idx += r * strides_[i];
  }
  return idx;
}

std::string FinAbGroup::to_string() const {
  if (orders_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) s += "x";
    s += "C" + std::to_string(orders_[i]);
  }
  return s;
}

RootOfUnity dual_pairing(const FinAbGroup& group, const Character& c, const GroupElement& g) {
  if (c.residues.size() != group.rank()) throw DomainError("character does not belong to the group");
  group.check(g);
  const long long e = group.exponent();
  long long num = 0;
  for (std::size_t i = 0; i < group.rank(); ++i) {
    const long long n = group.orders()[i];
    num = mod(num + mod(c.residues[i], n) * mod(g.residues[i], n) % n * (e / n), e);
  }
  return RootOfUnity(num, e);
}

std::pair<std::vector<GroupElement>, std::vector<Character>> canonical_generators(const FinAbGroup& group) {
  std::vector<GroupElement> gens;
  std::vector<Character> chars;
  for (std::size_t i = 0; i < group.rank(); ++i) {
    std::vector<long long> e(group.rank(), 0);
    e[i] = 1 % group.orders()[i];
    gens.push_back(GroupElement{e});
    chars.push_back(Character{e});
  }
  return {gens, chars};
}

bool SubgroupData::contains(const GroupElement& g) const {
  const long long idx = ambient.index_of(g);
  auto it = std::lower_bound(elements.begin(), elements.end(), idx,
                             [&](const GroupElement& a, long long i) { return ambient.index_of(a) < i; });
  return it != elements.end() && ambient.index_of(*it) == idx;
}

SubgroupData subgroup_closure(const FinAbGroup& group, const std::vector<GroupElement>& generators) {
  std::vector<char> seen(static_cast<std::size_t>(group.order()), 0);
  std::vector<long long> gen_idx;
  for (const auto& g : generators) gen_idx.push_back(group.index_of(g));
  std::deque<long long> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    long long x = queue.front();
    queue.pop_front();
    for (long long g : gen_idx) {
      long long y = group.add_index(x, g);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  SubgroupData out{group, {}, {}};
  for (const auto& g : generators) out.generators.push_back(group.element(g.residues));
  for (long long i = 0; i < group.order(); ++i)
    if (seen[i]) out.elements.push_back(group.element_at(i));
  return out;
}

SubgroupData whole_group(const FinAbGroup& group) {
  return subgroup_closure(group, canonical_generators(group).first);
}

SubgroupData subgroup_from_elements(const FinAbGroup& group, const std::vector<GroupElement>& elements) {
  std::vector<long long> idx;
  for (const auto& g : elements) idx.push_back(group.index_of(g));
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());

  std::vector<GroupElement> gens;
  SubgroupData cur = subgroup_closure(group, {});
  for (long long i : idx) {
    GroupElement g = group.element_at(i);
    if (cur.contains(g)) continue;
    gens.push_back(g);
    cur = subgroup_closure(group, gens);
  }
  if (cur.order() != static_cast<long long>(idx.size()) || (!idx.empty() && idx.front() != 0))
    throw DomainError("element set is not a subgroup");
  return cur;
}

std::vector<long long> quotient_invariants(const SubgroupData& sub) {
  return subquotient_invariants(whole_group(sub.ambient), sub);
}

std::vector<long long> subquotient_invariants(const SubgroupData& outer, const SubgroupData& inner) {
  if (!(outer.ambient == inner.ambient)) throw DomainError("subgroups live in different groups");
  for (const auto& g : inner.elements)
    if (!outer.contains(g)) throw DomainError("inner subgroup is not contained in the outer one");
  const FinAbGroup& G = outer.ambient;
  const std::size_t k = G.rank(), r = outer.generators.size(), s = inner.generators.size();
  if (r == 0) return {};

  // Relations among the outer generators modulo inner: the kernel of
  // [outer gens | -inner gens | -diag(n_i)] projected to the first r coordinates.
  IntMatrix a(k, r + s + k);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < k; ++i) a(i, j) = static_cast<long>(outer.generators[j].residues[i]);
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t i = 0; i < k; ++i) a(i, r + j) = -static_cast<long>(inner.generators[j].residues[i]);
  for (std::size_t i = 0; i < k; ++i) a(i, r + s + i) = -static_cast<long>(G.orders()[i]);

  auto kernel = integer_kernel(a);
  IntMatrix rel(kernel.size(), r);
  for (std::size_t row = 0; row < kernel.size(); ++row)
    for (std::size_t j = 0; j < r; ++j) rel(row, j) = kernel[row][j];
  auto inv = cokernel_invariants(rel);
  if (!inv.empty() && inv.back() == 0) throw Error("subquotient of a finite group came out infinite");
  return inv;
}

std::vector<long long> invariants_from_torsion_counts(long long order,
                                                      const std::function<long long(long long)>& killed_by) {
  std::vector<long long> cyclic;
  long long rest = order;
  for (long long p = 2; rest > 1; ++p) {
    if (rest % p) {
      if (p * p > rest) p = rest - 1;
      continue;
    }
    long long ppart = 1;
    while (rest % p == 0) {
      rest /= p;
      ppart *= p;
    }
    // ranks[j] = number of cyclic p-factors of order >= p^j
    std::vector<int> ranks{0};
    long long prev = 1, pj = 1;
    while (prev < ppart) {
      pj *= p;
      long long cur = killed_by(pj);
      if (cur % prev) throw Error("torsion counts are inconsistent");
      long long ratio = cur / prev;
      int r = 0;
      while (ratio > 1) {
        if (ratio % p) throw Error("torsion counts are inconsistent");
        ratio /= p;
        ++r;
      }
      ranks.push_back(r);
      if (r == 0) throw Error("torsion counts do not reach the group order");
      prev = cur;
    }
    ranks.push_back(0);
    long long q = 1;
    for (std::size_t j = 1; j + 1 < ranks.size(); ++j) {
      q *= p;
      for (int c = 0; c < ranks[j] - ranks[j + 1]; ++c) cyclic.push_back(q);
    }
  }
  return normalize_invariant_factors(cyclic);
}

}  // namespace ncpb
