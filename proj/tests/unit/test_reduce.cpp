#include "fixtures.hpp"
#include "oracles.hpp"

#include <disres/hermite.hpp>
#include <disres/reduce.hpp>

#include <doctest.h>

using namespace disres;
using fixture::lin;
using fixture::P;
using fixture::Q;
using fixture::X;

namespace {

// Summands a_l/b_l of the layer decomposition, keyed by l.
std::vector<std::pair<long, RatFun>> summands(const RatFun& f) {
  const ShiftLayers sl = shift_layers(f.den());
  std::vector<Poly> factors;
  for (const auto& [l, b] : sl.layers) factors.push_back(b);
  const auto a = parfrac(f, factors);
  std::vector<std::pair<long, RatFun>> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.emplace_back(sl.layers[i].first, RatFun(a[i], factors[i]));
  return out;
}

void check_reduced(const RatFun& f, const ReducedForm& r) {
  CHECK(f - r.reduced == delta(r.certificate));
  if (!r.reduced.is_zero()) {
    CHECK(r.reduced.is_proper());
    CHECK(shift_set(r.reduced.den()).empty());
  }
}

}  // namespace

TEST_CASE("order-2 input layers, summands and reduced forms") {
  const HermiteList l = hermite_list(fixture::order2_input());
  const RatFun& f1 = l.components[0];
  const RatFun& f2 = l.components[1];
  const Poly b0 = lin(-1) * P({2, 0, 1});

  const ShiftLayers s2 = shift_layers(f2.den());
  CHECK(s2.initial == b0);
  REQUIRE(s2.layers.size() == 2);
  CHECK(s2.layers[1] == std::pair<long, Poly>{2, lin(1)});
  const auto p2 = summands(f2);
  CHECK(p2[0].second == RatFun(-P({4, 3, 2}), b0 * Q(36)));
  CHECK(p2[1].second == RatFun(P({1}), lin(1) * Q(12)));
  const ReducedForm r2 = simple_reduction(f2);
  CHECK(r2.reduced == RatFun(P({2, -3, 1}), b0 * Q(36)));
  check_reduced(f2, r2);

  const ShiftLayers s1 = shift_layers(f1.den());
  CHECK(s1.initial == b0);
  REQUIRE(s1.layers.size() == 3);
  CHECK(s1.layers[1] == std::pair<long, Poly>{1, X()});
  CHECK(s1.layers[2] == std::pair<long, Poly>{2, lin(1)});
  const auto p1 = summands(f1);
  CHECK(p1[0].second == RatFun(-P({5, 1, 9}), b0 * Q(36)));
  CHECK(p1[1].second == RatFun(P({1}), X() * Q(2)));
  CHECK(p1[2].second == RatFun(P({-1}), lin(1) * Q(4)));
  const ReducedForm r1 = simple_reduction(f1);
  CHECK(r1.reduced == RatFun(P({13, -1}), b0 * Q(36)));
  check_reduced(f1, r1);
}

TEST_CASE("order-3 input layers, summands and reduced forms") {
  const HermiteList l = hermite_list(fixture::order3_input());
  const Poly q = P({5, 4, 1});

  const auto p3 = summands(l.components[2]);
  REQUIRE(p3.size() == 2);
  CHECK(p3[0].second == RatFun(P({-1}), lin(-2) * Q(40)));
  CHECK(p3[1] == std::pair<long, RatFun>{2, RatFun(P({1}), X() * Q(600))});
  CHECK(simple_reduction(l.components[2]).reduced == RatFun(P({-7}), lin(-2) * Q(300)));

  const auto p2 = summands(l.components[1]);
  REQUIRE(p2.size() == 2);
  CHECK(p2[0].second == RatFun(-P({373, 306, 76}), q * lin(-2) * Q(2000)));
  CHECK(p2[0].second == simple_reduction(l.components[1]).reduced - sigma_pow(p2[1].second, 2));
  CHECK(p2[1] == std::pair<long, RatFun>{2, RatFun(P({-103}), X() * Q(18000))});
  CHECK(simple_reduction(l.components[1]).reduced == RatFun(-P({3872, 3166, 787}), q * lin(-2) * Q(18000)));

  const ShiftLayers s1 = shift_layers(l.components[0].den());
  REQUIRE(s1.layers.size() == 4);
  CHECK(s1.initial == lin(-3) * q);
  CHECK(s1.layers[1].second == lin(-2));
  CHECK(s1.layers[2].second == P({1, 0, 1}));
  CHECK(s1.layers[3].second == X());
  const auto p1 = summands(l.components[0]);
  CHECK(p1[0].second == RatFun(-P({-9293, 37742, 13391}), lin(-3) * q * Q(1080000)));
  CHECK(p1[1].second == RatFun(P({1}), lin(-2) * Q(250)));
  CHECK(p1[2].second == RatFun(P({-1, -7}), P({1, 0, 1}) * Q(8000)));
  CHECK(p1[3].second == RatFun(P({313}), X() * Q(33750)));
  const ReducedForm r1 = simple_reduction(l.components[0]);
  CHECK(r1.reduced == RatFun(P({1387, 273}), lin(-3) * q * Q(20000)));
  check_reduced(l.components[0], r1);
}

TEST_CASE("telescoping inputs reduce to zero") {
  const RatFun f = RatFun(P({1}), X()) - RatFun(P({1}), lin(-4));
  const ReducedForm r = simple_reduction(f);
  CHECK(r.reduced.is_zero());
  check_reduced(f, r);
  CHECK_THROWS_AS(simple_reduction(RatFun(P({1}), P({0, 0, 1}))), Error);
  CHECK_THROWS_AS(simple_reduction(RatFun(P({0, 1}), lin(2))), Error);
}

TEST_CASE("random simple-pole inputs") {
  oracle::Rng rng(41);
  for (int it = 0; it < 40; ++it) {
    Poly b = Poly::constant(1);
    const Poly q = rng.monic_poly(static_cast<int>(rng.uniform(1, 2)), 4);
    for (int c = 0; c < 3; ++c) b *= taylor_shift(q, Q(rng.uniform(-6, 6)));
    b = squarefree_part(b * rng.monic_poly(1, 9));
    const RatFun f = rng.proper_over(b, 20);
    check_reduced(f, simple_reduction(f));
  }
}

TEST_CASE("joint reduction is compatible") {
  const std::vector<RatFun> fs{RatFun(P({1}), X()), RatFun(P({1}), lin(-3)), RatFun(P({2}), lin(5) * P({1, 0, 1}))};
  const auto j = simple_reduction_plus(fs);
  Poly prod = Poly::constant(1);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    CHECK(fs[i] - j.reduced[i] == delta(j.certificates[i]));
    prod *= j.reduced[i].den();
  }
  CHECK(shift_set(squarefree_part(prod)).empty());
  CHECK(j.reduced[0].den() == j.reduced[1].den());

  const std::vector<RatFun> bad{RatFun(P({1}), X()), RatFun(P({1}), P({0, 0, 1}))};
  try {
    simple_reduction_plus(bad);
    FAIL("expected an error");
  } catch (const IndexedError& e) {
    CHECK(e.index() == 1);
    CHECK(e.code() == ErrorCode::NotSquarefree);
  }
}
