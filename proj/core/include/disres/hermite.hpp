#pragma once

#include <disres/ratfun.hpp>

#include <vector>

namespace disres {

/// f = d/dx(g) + h, g proper, h proper with squarefree denominator.
struct HermiteSplit {
  RatFun g;
  RatFun h;
};

/// Hermite reduction of a proper rational function, using one squarefree
/// decomposition of the denominator. Throws NotProper.
HermiteSplit hermite_reduction(const RatFun& f);

/// Components f_1..f_m of a proper f, each proper with squarefree denominator,
/// such that f = sum_k (-1)^(k-1)/(k-1)! * d^(k-1)/dx^(k-1) f_k and f_m != 0.
/// f_k carries exactly the order-k partial-fraction coefficients of f as
/// first-order residues.
struct HermiteList {
  std::vector<RatFun> components;

  std::size_t order() const noexcept { return components.size(); }
  /// Recombine the components into the original function.
  RatFun reconstruct() const;
};

/// Throws NotProper or ZeroInput.
HermiteList hermite_list(const RatFun& f);

}  // namespace disres
