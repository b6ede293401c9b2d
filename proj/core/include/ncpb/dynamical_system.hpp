#pragma once

#include <vector>

#include "ncpb/algebras.hpp"
#include "ncpb/factor_systems.hpp"
#include "ncpb/groups.hpp"
#include "ncpb/verdict.hpp"

namespace ncpb {

/// (A, Lambda, alpha) with alpha a homomorphism into Aut(A), given on the standard
/// generators of Lambda and tabulated over all elements.
struct DynamicalSystem {
  StructureAlgebra algebra;
  FinAbGroup group;
  std::vector<CycloMatrix> generators;
  std::vector<AlgebraMap> table;  // by group index

  const AlgebraMap& at(long long g) const { return table.at(static_cast<std::size_t>(g)); }
  OuterAction as_outer_action() const { return OuterAction{group, algebra, table}; }
};

/// Certifies each generator image as an automorphism of order dividing n_i and
/// checks that the images commute; throws DomainError otherwise.
DynamicalSystem make_dynamical_system(StructureAlgebra algebra, FinAbGroup group,
                                      std::vector<CycloMatrix> generators);

/// Re-runs the checks of make_dynamical_system and compares the stored table.
Verdict verify_dynamical_system(const DynamicalSystem& ds);

}  // namespace ncpb
