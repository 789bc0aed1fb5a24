#include <disres/dispersion.hpp>
#include <disres/hermite.hpp>
#include <disres/residues.hpp>
#include <disres/telescope.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace disres;

namespace {

Poly random_monic(std::mt19937_64& rng, int degree, long range) {
  std::uniform_int_distribution<long> coeff(-range, range);
  std::vector<Rat> c(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i < degree; ++i) c[static_cast<std::size_t>(i)] = coeff(rng);
  c.back() = 1;
  return Poly(std::move(c));
}

// numerator / prod_{i <= levels} R_i^i with quadratic seeds R_i
RatFun hermite_worst_case(int levels, unsigned seed) {
  std::mt19937_64 rng(seed);
  Poly den = Poly::constant(1);
  for (int i = 1; i <= levels; ++i) den *= pow(random_monic(rng, 2, 20), static_cast<unsigned>(i));
  return RatFun(random_monic(rng, den.degree() - 1, 20), den);
}

// Copies of a seed polynomial at the given integer offsets.
Poly shifted_copies(int seed_degree, std::initializer_list<long> offsets) {
  std::mt19937_64 rng(7);
  const Poly q = random_monic(rng, seed_degree, 7);
  Poly b = Poly::constant(1);
  for (long o : offsets) b *= taylor_shift(q, Rat(o));
  return b;
}

RatFun orbit_function(int orbits, int order) {
  RatFun f;
  for (int j = 0; j < orbits; ++j) {
    const Rat alpha(Int(j + 1), Int(orbits + 2));
    for (int k = 1; k <= order; ++k) {
      for (long n : {0L, 3L, 7L}) {
        f += RatFun(Poly::constant(Rat(k + n)), pow(Poly::linear(alpha + Rat(n)), static_cast<unsigned>(k)));
      }
    }
  }
  return f;
}

void BM_HermiteList(benchmark::State& state) {
  const RatFun f = hermite_worst_case(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(hermite_list(f));
  state.counters["degree"] = f.den().degree();
}
BENCHMARK(BM_HermiteList)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_ShiftSet(benchmark::State& state) {
  const Poly b = state.range(0) == 1 ? shifted_copies(2, {0, 3, -5, 9})
               : state.range(0) == 2 ? shifted_copies(3, {0, 4, -7, 11})
                                     : shifted_copies(4, {0, 2, 6, -9, 12});
  for (auto _ : state) benchmark::DoNotOptimize(shift_set(b));
  state.counters["degree"] = b.degree();
}
BENCHMARK(BM_ShiftSet)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_DiscreteResidues(benchmark::State& state) {
  const RatFun f = orbit_function(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(discrete_residues(f));
  state.counters["degree"] = f.den().degree();
}
BENCHMARK(BM_DiscreteResidues)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_IsSummable(benchmark::State& state) {
  const RatFun g = orbit_function(static_cast<int>(state.range(0)), 2);
  const RatFun f = delta(g);
  for (auto _ : state) benchmark::DoNotOptimize(is_summable(f));
}
BENCHMARK(BM_IsSummable)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
