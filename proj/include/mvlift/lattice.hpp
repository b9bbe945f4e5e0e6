#pragma once

#include <cstddef>
#include <vector>

#include "mvlift/numeric.hpp"

namespace mvlift {

/// Row-major integer matrix.
using IntMatrix = std::vector<IntVector>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix transpose(const IntMatrix& a);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVector multiply(const IntMatrix& a, const IntVector& v);

Integer determinant(const IntMatrix& a);
bool is_unimodular(const IntMatrix& a);

/// Inverse of a unimodular matrix; throws PreconditionError otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

/// Unimodular column reduction: a * transform = [H | 0] where H has `rank`
/// nonzero columns in column-echelon form. The trailing columns of
/// `transform` form a lattice basis of {x in Z^n : a x = 0}.
struct ColumnReduction {
  IntMatrix reduced;
  IntMatrix transform;
  std::size_t rank = 0;
};
ColumnReduction column_reduce(const IntMatrix& a, std::size_t columns);

/// Lattice basis of {x in Z^n : a x = 0}, as a list of vectors.
std::vector<IntVector> integer_kernel_lattice(const IntMatrix& a, std::size_t columns);

/// Rank of a set of row vectors together with a set of pivot columns such that
/// the rows restricted to those columns still have full rank.
struct RankInfo {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};
RankInfo rank_info(const std::vector<IntVector>& rows, std::size_t columns);

/// Primitive integer vectors spanning the rational nullspace of the rows.
std::vector<IntVector> rational_kernel(const std::vector<IntVector>& rows, std::size_t columns);

/// Unimodular matrix whose last row is `row` (which must be primitive). The
/// remaining rows are size-reduced deterministically, so `row == e_n` yields
/// the identity.
IntMatrix complete_to_unimodular(const IntVector& row);

/// Lattice basis of row-perp: the integer vectors orthogonal to a primitive vector.
std::vector<IntVector> orthogonal_lattice_basis(const IntVector& row);

}  // namespace mvlift
