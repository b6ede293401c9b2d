#include "ncpb/dynamical_system.hpp"

namespace ncpb {

DynamicalSystem make_dynamical_system(StructureAlgebra algebra, FinAbGroup group,
                                      std::vector<CycloMatrix> generators) {
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (!(generators[i] * generators[j] == generators[j] * generators[i]))
        throw DomainError("generator images " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");
  OuterAction s = homomorphic_action(group, algebra, generators);
  return DynamicalSystem{std::move(algebra), std::move(group), std::move(generators), std::move(s.maps)};
}

Verdict verify_dynamical_system(const DynamicalSystem& ds) {
  try {
    auto fresh = make_dynamical_system(ds.algebra, ds.group, ds.generators);
    if (fresh.table.size() != ds.table.size()) return Verdict::fail("action table has the wrong length");
    for (std::size_t g = 0; g < ds.table.size(); ++g)
      if (!(fresh.table[g] == ds.table[g]) || !(fresh.table[g].inverse == ds.table[g].inverse))
        return Verdict::fail("action table disagrees with the generators", {g});
  } catch (const DomainError& e) {
    return Verdict::fail(e.what());
  }
  return Verdict::pass();
}

}  // namespace ncpb
