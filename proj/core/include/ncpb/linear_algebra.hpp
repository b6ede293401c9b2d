#pragma once

#include <optional>
#include <vector>

#include "ncpb/exact_scalars.hpp"

namespace ncpb {

struct RowEchelon {
  CycloMatrix reduced;               // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Gauss-Jordan elimination over Q(zeta_N).
RowEchelon row_reduce(CycloMatrix m);

struct DetInverse {
  Cyclo det;
  std::optional<CycloMatrix> inverse;  // present iff det != 0; verified M*M^-1 = M^-1*M = I
};

DetInverse matrix_det_inverse(const CycloMatrix& m);

std::size_t rank(const CycloMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column, with a 1 in that column.
std::vector<CycloVector> nullspace(const CycloMatrix& m);

/// Some x with m x = b, if one exists.
std::optional<CycloVector> solve(const CycloMatrix& m, const CycloVector& b);

/// The columns of m at its pivot positions: a basis of the column space drawn
/// from the columns themselves.
std::vector<CycloVector> column_space_basis(const CycloMatrix& m);

/// Whether v lies in the span of basis (all vectors the same length).
bool in_span(const std::vector<CycloVector>& basis, const CycloVector& v);

}  // namespace ncpb
