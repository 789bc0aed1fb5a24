#pragma once

#include <disres/ratfun.hpp>

namespace fixture {

using disres::Poly;
using disres::Rat;
using disres::RatFun;

inline Poly P(std::initializer_list<Rat> ascending) { return Poly(ascending); }
inline Rat Q(long n, long d = 1) { return disres::make_rat(n, d); }
inline Poly X() { return Poly::x(); }
inline Poly lin(long root) { return Poly::linear(Rat(root)); }

// (x+2) / (x (x^2-1)^2 (x^2+2)^2)
inline RatFun order2_input() {
  const Poly xm = P({-1, 0, 1});
  const Poly x2 = P({2, 0, 1});
  return RatFun(P({2, 1}), X() * xm * xm * x2 * x2);
}

// 1 / (x^3 (x+2)^3 (x+3) (x^2+1) (x^2+4x+5)^2)
inline RatFun order3_input() {
  const Poly q = P({5, 4, 1});
  return RatFun(Poly::constant(1),
                disres::pow(X(), 3) * disres::pow(lin(-2), 3) * lin(-3) * P({1, 0, 1}) * q * q);
}

// Order-2 input, order-1 residue polynomial that agrees with the complete partial
// fraction decomposition; the acceptance constant differs in two coefficients.
inline Poly order2_input_D1_verified() { return P({Q(31, 648), Q(-11, 432), Q(73, 1296)}); }
inline Poly order2_input_D1_expected() { return P({Q(51, 648), Q(-11, 432), Q(-73, 1296)}); }
inline Poly order2_input_D2() { return P({Q(1, 24), Q(1, 72), Q(1, 36)}); }
inline Poly order2_input_B() { return lin(-1) * P({2, 0, 1}); }

inline Poly order3_input_B1() { return lin(-3) * P({5, 4, 1}); }
inline Poly order3_input_D1() { return P({Q(-1321, 80000), Q(33, 40000), Q(59, 16000)}); }
inline Poly order3_input_B2() { return lin(-2) * P({5, 4, 1}); }
inline Poly order3_input_D2() { return P({Q(-403, 2250), Q(-509, 3600), Q(-1277, 36000)}); }
inline Poly order3_input_B3() { return lin(-2); }
inline Poly order3_input_D3() { return P({Q(-7, 300)}); }
inline Poly order3_input_shared_D2() { return P({Q(-6421, 72000), Q(-5, 72), Q(-1259, 72000)}); }
inline Poly order3_input_shared_D3() { return P({Q(-35, 600), Q(-7, 150), Q(-7, 600)}); }

}  // namespace fixture
