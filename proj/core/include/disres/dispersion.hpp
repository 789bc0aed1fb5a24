#pragma once

#include <disres/ratfun.hpp>

#include <vector>

namespace disres {

/// Positive integers l with deg gcd(b(x), b(x+l)) >= 1, ascending.
struct ShiftSet {
  std::vector<long> shifts;

  bool empty() const noexcept { return shifts.empty(); }
  /// max(shifts ∪ {0})
  long dispersion() const noexcept { return shifts.empty() ? 0 : shifts.back(); }
  friend bool operator==(const ShiftSet&, const ShiftSet&) = default;
};

/// Autodispersion set of a nonzero squarefree polynomial, via the roots of
/// Res_x(b(x), b(x+z)). Throws ZeroInput or NotSquarefree.
ShiftSet shift_set(const Poly& b);

/// Polar dispersion of f: dispersion of the squarefree part of its denominator.
/// Throws ConstantDenominator.
long pdisp(const RatFun& f);

}  // namespace disres
