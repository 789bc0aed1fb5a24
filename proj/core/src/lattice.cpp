#include <disres/lattice.hpp>

#include <utility>

namespace disres {

namespace {

void sub_multiple(IntVector& row, const IntVector& pivot_row, const Int& q, std::size_t from) {
  if (q == 0) return;
  for (std::size_t j = from; j < row.size(); ++j) row[j] -= q * pivot_row[j];
}

// Row echelon form over Z on columns [0, upto), using only unimodular row operations.
// Returns the number of pivot rows; rows past it are zero on [0, upto).
std::size_t echelon(std::vector<IntVector>& rows, std::size_t upto, bool reduce_above) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < upto && r < rows.size(); ++c) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        sub_multiple(rows[i], rows[r], q, c);
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r == rows.size() || rows[r][c] == 0) continue;
    if (rows[r][c] < 0) {
      for (auto& e : rows[r]) e = -e;
    }
    if (reduce_above) {
      for (std::size_t i = 0; i < r; ++i) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        sub_multiple(rows[i], rows[r], q, c);
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

IntLattice hnf(std::vector<IntVector> rows, std::size_t dim) {
  const std::size_t r = echelon(rows, dim, true);
  rows.resize(r);
  return {dim, std::move(rows)};
}

IntLattice integer_kernel(const std::vector<IntVector>& A, std::size_t ncols) {
  const std::size_t m = A.size();
  // Rows of [A^T | I]; unimodular elimination on the A^T block leaves kernel
  // vectors in the identity block of the rows that became zero.
  std::vector<IntVector> rows(ncols, IntVector(m + ncols));
  for (std::size_t j = 0; j < ncols; ++j) {
    for (std::size_t i = 0; i < m; ++i) rows[j][i] = A[i][j];
    rows[j][m + j] = 1;
  }
  const std::size_t r = echelon(rows, m, false);
  std::vector<IntVector> kernel;
  for (std::size_t i = r; i < rows.size(); ++i) kernel.emplace_back(rows[i].begin() + m, rows[i].end());
  return hnf(std::move(kernel), ncols);
}

bool IntLattice::contains(const IntVector& v) const {
  if (v.size() != dim) return false;
  IntVector rest = v;
  std::size_t row = 0;
  for (std::size_t c = 0; c < dim; ++c) {
    if (row < basis.size() && basis[row][c] != 0) {
      if (!mpz_divisible_p(rest[c].get_mpz_t(), basis[row][c].get_mpz_t())) return false;
      const Int q = rest[c] / basis[row][c];
      for (std::size_t j = c; j < dim; ++j) rest[j] -= q * basis[row][j];
      ++row;
    } else if (rest[c] != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace disres
