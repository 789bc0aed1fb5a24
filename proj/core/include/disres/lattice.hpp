#pragma once

#include <disres/rat.hpp>

#include <cstddef>
#include <vector>

namespace disres {

using IntVector = std::vector<Int>;

/// Sublattice of Z^dim given by a basis in row Hermite normal form: pivots move
/// strictly right, pivot entries are positive, and entries above a pivot lie in
/// [0, pivot).
struct IntLattice {
  std::size_t dim = 0;
  std::vector<IntVector> basis;

  std::size_t rank() const noexcept { return basis.size(); }
  bool empty() const noexcept { return basis.empty(); }
  bool contains(const IntVector& v) const;
  friend bool operator==(const IntLattice&, const IntLattice&) = default;
};

/// HNF of the lattice spanned by the given rows (each of length dim).
IntLattice hnf(std::vector<IntVector> rows, std::size_t dim);

/// {v in Z^ncols : A v = 0}; the result is saturated.
IntLattice integer_kernel(const std::vector<IntVector>& A, std::size_t ncols);

}  // namespace disres
