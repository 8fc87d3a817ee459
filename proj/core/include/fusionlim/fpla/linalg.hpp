#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "fusionlim/fpla/matrix.hpp"
#include "fusionlim/fpla/sparse_matrix.hpp"
#include "fusionlim/fpla/subspace.hpp"

namespace fusionlim::fpla {

Subspace row_space(const FpMatrix& a);
/// Streams the rows of a sparse matrix into an echelon basis.
Subspace row_space(const SparseFpMatrix& a);

std::size_t rank(const FpMatrix& a);
/// Streams along the longer dimension so the pivot basis never holds more
/// than min(rows, cols) coordinates per vector.
std::size_t rank(const SparseFpMatrix& a);

/// {x : A x = 0}; dim = cols − rank.
Subspace kernel_basis(const FpMatrix& a);
Subspace kernel_basis(const SparseFpMatrix& a);

/// Column span of A.
Subspace image_basis(const FpMatrix& a);
Subspace image_basis(const SparseFpMatrix& a);

/// Some x with A x = b (free variables set to zero); nullopt when the system
/// is inconsistent.
std::optional<Vector> solve(const FpMatrix& a, std::span<const Residue> b);

/// Z / B with B ⊆ Z checked.
Subquotient subquotient(const Subspace& z, const Subspace& b);

/// True when the linear map given by A (applied to column vectors) is
/// injective.
bool is_injective(const FpMatrix& a);

}  // namespace fusionlim::fpla
