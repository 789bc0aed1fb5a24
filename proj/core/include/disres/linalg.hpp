#pragma once

#include <disres/rat.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace disres {

using RatVector = std::vector<Rat>;
using RatMatrix = std::vector<RatVector>;

/// Brings rows into reduced row echelon form in place and drops zero rows.
/// Every row must have `ncols` entries. Returns the pivot columns, ascending.
std::vector<std::size_t> rref(RatMatrix& rows, std::size_t ncols);

std::size_t rank(RatMatrix rows, std::size_t ncols);

/// Basis of {v : A v = 0} in reduced echelon form (leading one, ascending pivots).
RatMatrix kernel_basis(const RatMatrix& A, std::size_t ncols);

/// Some solution of A v = rhs, or nothing when the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& A, const RatVector& rhs, std::size_t ncols);

}  // namespace disres
