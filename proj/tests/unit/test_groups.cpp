#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ncpb/errors.hpp"
#include "ncpb/groups.hpp"

using namespace ncpb;

TEST_CASE("indexing and group law") {
  FinAbGroup g({2, 4, 3});
  CHECK(g.order() == 24);
  CHECK(g.exponent() == 12);
  CHECK(g.to_string() == "C2xC4xC3");
  CHECK(g.index_of(g.identity()) == 0);
  CHECK(g.element_at(1).residues == std::vector<long long>{0, 0, 1});
  for (long long i = 0; i < g.order(); ++i) {
    CHECK(g.index_of(g.element_at(i)) == i);
    CHECK(g.add_index(i, g.neg_index(i)) == 0);
    for (long long j = 0; j < g.order(); ++j)
      CHECK(g.element_at(g.add_index(i, j)) == g.add(g.element_at(i), g.element_at(j)));
  }
  CHECK(g.element_order(g.element({1, 1, 1})) == 12);
  CHECK(g.element({3, -1, 7}).residues == std::vector<long long>{1, 3, 1});
  CHECK(FinAbGroup().is_trivial());
  CHECK_THROWS_AS(g.check(GroupElement{{1, 1}}), DomainError);
}

TEST_CASE("dual pairing is bilinear") {
  FinAbGroup g({4, 6});
  std::mt19937 rng(4);
  for (int t = 0; t < 100; ++t) {
    auto a = g.element_at(rng() % 24), b = g.element_at(rng() % 24);
    Character c{g.element_at(rng() % 24).residues};
    CHECK(dual_pairing(g, c, g.add(a, b)) == combine(dual_pairing(g, c, a), dual_pairing(g, c, b)));
  }
  auto [gens, chars] = canonical_generators(g);
  CHECK(dual_pairing(g, chars[0], gens[0]) == RootOfUnity(1, 4));
  CHECK(dual_pairing(g, chars[0], gens[1]).is_identity());
}

// Cosets counted by brute force.
long long coset_count(const FinAbGroup& g, const SubgroupData& sub) {
  std::set<std::vector<long long>> seen;
  for (const auto& x : g.elements()) {
    std::vector<long long> coset;
    for (const auto& h : sub.elements) coset.push_back(g.index_of(g.add(x, h)));
    std::sort(coset.begin(), coset.end());
    seen.insert(coset);
  }
  return static_cast<long long>(seen.size());
}

TEST_CASE("quotients") {
  FinAbGroup g({2, 4});
  auto sub = subgroup_closure(g, {g.element({1, 2})});
  CHECK(sub.order() == 2);
  CHECK(quotient_invariants(sub) == std::vector<long long>{4});
  CHECK(quotient_invariants(subgroup_closure(g, {})) == std::vector<long long>{2, 4});
  CHECK(quotient_invariants(whole_group(g)).empty());
  CHECK(quotient_invariants(subgroup_closure(FinAbGroup({2, 3}), {})) == std::vector<long long>{6});

  std::mt19937 rng(9);
  for (int t = 0; t < 30; ++t) {
    FinAbGroup h({2 + static_cast<long long>(rng() % 3), 2 + static_cast<long long>(rng() % 4)});
    auto s = subgroup_closure(h, {h.element_at(rng() % h.order()), h.element_at(rng() % h.order())});
    long long q = 1;
    for (auto f : quotient_invariants(s)) q *= f;
    CHECK(q == coset_count(h, s));
    CHECK(q * s.order() == h.order());
    auto again = subgroup_from_elements(h, s.elements);
    CHECK(again.elements == s.elements);
  }
}

TEST_CASE("invariants from torsion counts") {
  FinAbGroup g({2, 4, 4});
  auto killed = [&](long long d) {
    long long c = 0;
    for (const auto& x : g.elements()) c += g.scale(d, x) == g.identity();
    return c;
  };
  CHECK(invariants_from_torsion_counts(g.order(), killed) == std::vector<long long>{2, 4, 4});
}
