#include "fixtures.hpp"
#include "oracles.hpp"

#include <disres/dispersion.hpp>

#include <doctest.h>

using namespace disres;
using fixture::P;
using fixture::Q;

namespace {
std::vector<long> shifts(const Poly& b) { return shift_set(b).shifts; }
}  // namespace

TEST_CASE("shift sets of the fixture inputs") {
  CHECK(shifts(P({0, 2, 1})) == std::vector<long>{2});
  CHECK(shifts(P({-2, 0, 1, 0, 1})) == std::vector<long>{2});
  CHECK(shifts(P({0, -2, 0, 1, 0, 1})) == std::vector<long>{1, 2});
  const Poly b1 = P({1, 0, 1}) * fixture::lin(-3) * P({5, 4, 1}) * fixture::lin(-2) * fixture::X();
  CHECK(shifts(b1) == std::vector<long>{1, 2, 3});
}

TEST_CASE("small cases") {
  CHECK(shift_set(P({3})).empty());
  CHECK(shift_set(P({0, 1})).empty());
  CHECK(shift_set(P({1, 0, 1})).empty());
  CHECK(shifts(P({0, 1}) * P({-7, 1})) == std::vector<long>{7});
  CHECK(shift_set(P({0, 1}) * P({Q(-1, 2), 1})).empty());
  CHECK(shift_set(P({0, 1}) * P({-7, 1})).dispersion() == 7);
  CHECK_THROWS_AS(shift_set(Poly()), Error);
  CHECK_THROWS_AS(shift_set(P({0, 0, 1})), Error);
}

TEST_CASE("brute-force oracle on constructed polynomials") {
  oracle::Rng rng(31);
  for (int it = 0; it < 40; ++it) {
    Poly b = Poly::constant(1);
    const int seeds = static_cast<int>(rng.uniform(1, 2));
    for (int s = 0; s < seeds; ++s) {
      const Poly q = rng.monic_poly(static_cast<int>(rng.uniform(1, 2)), 6);
      const int copies = static_cast<int>(rng.uniform(1, 3));
      for (int c = 0; c < copies; ++c) b *= taylor_shift(q, Q(rng.uniform(-8, 8)));
    }
    b = squarefree_part(b);
    CHECK(shifts(b) == oracle::brute_shift_set(b));
  }
}

TEST_CASE("polar dispersion") {
  CHECK(pdisp(RatFun(P({1}), P({0, 1}) * P({5, 1}))) == 5);
  CHECK(pdisp(RatFun(P({1}), pow(P({0, 1}), 3) * P({-2, 1}))) == 2);
  CHECK(pdisp(RatFun(P({1}), P({1, 0, 1}))) == 0);
  CHECK_THROWS_AS(pdisp(RatFun(P({1, 1}))), Error);
}
