#include "oracles.hpp"

#include <disres/lattice.hpp>
#include <disres/linalg.hpp>

#include <doctest.h>

using namespace disres;

TEST_CASE("rational kernels in echelon form") {
  const RatMatrix A{{1, 1, 1}, {0, 1, 2}};
  const RatMatrix K = kernel_basis(A, 3);
  CHECK(K == RatMatrix{{1, -2, 1}});
  CHECK(kernel_basis({}, 2) == RatMatrix{{1, 0}, {0, 1}});
  CHECK(rank(A, 3) == 2);
  const auto x = solve(A, {6, 5}, 3);
  REQUIRE(x.has_value());
  CHECK((*x)[0] + (*x)[1] + (*x)[2] == 6);
  CHECK(!solve({{1, 1}, {2, 2}}, {1, 3}, 2).has_value());

  oracle::Rng rng(71);
  for (int it = 0; it < 30; ++it) {
    const auto rows = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto cols = static_cast<std::size_t>(rng.uniform(1, 6));
    RatMatrix M(rows, RatVector(cols));
    for (auto& r : M) {
      for (auto& e : r) e = Rat(rng.uniform(-3, 3));
    }
    const RatMatrix ker = kernel_basis(M, cols);
    CHECK(ker.size() + rank(M, cols) == cols);
    for (const auto& v : ker) {
      for (const auto& r : M) {
        Rat s = 0;
        for (std::size_t j = 0; j < cols; ++j) s += r[j] * v[j];
        CHECK(s == 0);
      }
    }
  }
}

TEST_CASE("Hermite normal form") {
  const IntLattice L = hnf({{2, 4}, {3, 5}}, 2);
  CHECK(L.basis == std::vector<IntVector>{{1, 1}, {0, 2}});
  CHECK(L.contains({3, 5}));
  CHECK(!L.contains({1, 2}));
  CHECK(hnf({{0, 0}}, 2).empty());
  CHECK(hnf({{4, 6}, {6, 9}}, 2).basis == std::vector<IntVector>{{2, 3}});
}

TEST_CASE("integer kernels are saturated") {
  const IntLattice K = integer_kernel({{2, 1}}, 2);
  CHECK(K.basis == std::vector<IntVector>{{1, -2}});
  const IntLattice K2 = integer_kernel({{2, 4}}, 2);
  CHECK(K2.basis == std::vector<IntVector>{{2, -1}});
  CHECK(integer_kernel({{1, 0}, {0, 1}}, 2).empty());
  CHECK(integer_kernel({}, 3).rank() == 3);

  oracle::Rng rng(72);
  for (int it = 0; it < 30; ++it) {
    const auto cols = static_cast<std::size_t>(rng.uniform(2, 5));
    std::vector<IntVector> A(static_cast<std::size_t>(rng.uniform(1, 2)), IntVector(cols));
    for (auto& r : A) {
      for (auto& e : r) e = rng.uniform(-6, 6);
    }
    const IntLattice K = integer_kernel(A, cols);
    RatMatrix Q;
    for (const auto& r : A) Q.emplace_back(r.begin(), r.end());
    CHECK(K.rank() == kernel_basis(Q, cols).size());
    for (const auto& v : K.basis) {
      for (const auto& r : A) {
        Int s = 0;
        for (std::size_t j = 0; j < cols; ++j) s += r[j] * v[j];
        CHECK(s == 0);
      }
    }
    // Saturation: small kernel vectors found by search all lie in K.
    if (cols == 2) {
      for (long a = -12; a <= 12; ++a) {
        for (long b = -12; b <= 12; ++b) {
          bool zero = true;
          for (const auto& r : A) zero = zero && r[0] * a + r[1] * b == 0;
          if (zero) CHECK(K.contains({a, b}));
        }
      }
    }
  }
}
