#include <disres/linalg.hpp>

#include <utility>

namespace disres {

std::vector<std::size_t> rref(RatMatrix& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rat inv = 1 / rows[r][c];
    for (std::size_t j = c; j < ncols; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rat f = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j) {
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::size_t rank(RatMatrix rows, std::size_t ncols) { return rref(rows, ncols).size(); }

RatMatrix kernel_basis(const RatMatrix& A, std::size_t ncols) {
  RatMatrix m = A;
  const auto pivots = rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;

  RatMatrix basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(ncols);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  rref(basis, ncols);
  return basis;
}

std::optional<RatVector> solve(const RatMatrix& A, const RatVector& rhs, std::size_t ncols) {
  RatMatrix aug;
  aug.reserve(A.size());
  for (std::size_t i = 0; i < A.size(); ++i) {
    RatVector row = A[i];
    row.resize(ncols);
    row.push_back(rhs[i]);
    aug.push_back(std::move(row));
  }
  const auto pivots = rref(aug, ncols + 1);
  if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;
  RatVector x(ncols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][ncols];
  return x;
}

}  // namespace disres
