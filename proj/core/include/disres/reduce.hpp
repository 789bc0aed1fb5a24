#pragma once

#include <disres/dispersion.hpp>
#include <disres/ratfun.hpp>

#include <span>
#include <utility>
#include <vector>

namespace disres {

/// input - reduced = delta(certificate); reduced is proper with squarefree,
/// shiftfree denominator.
struct ReducedForm {
  RatFun reduced;
  RatFun certificate;
};

struct JointReducedForms {
  std::vector<RatFun> reduced;
  std::vector<RatFun> certificates;
};

/// Splitting of a squarefree b by distance from the leftmost root of each
/// Z-orbit: layers[j] = (l, b_l) with b_l = gcd(b0(x - l), b); the layers are
/// pairwise coprime, multiply to b, and l = 0 comes first with b_0 = initial.
struct ShiftLayers {
  Poly initial;
  std::vector<std::pair<long, Poly>> layers;
};

/// Divisor of initial roots of a squarefree b with the given autodispersion set.
Poly initial_roots_divisor(const Poly& b, const ShiftSet& shifts);
ShiftLayers shift_layers(const Poly& b);

/// Reduced form of a proper f with squarefree denominator, with certificate.
/// Throws NotProper or NotSquarefree.
ReducedForm simple_reduction(const RatFun& f);

/// Compatible reduced forms of several functions: the product of all reduced
/// denominators is shiftfree. Errors carry the index of the offending input.
JointReducedForms simple_reduction_plus(std::span<const RatFun> fs);

}  // namespace disres
