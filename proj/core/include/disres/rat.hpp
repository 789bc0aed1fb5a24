#pragma once

#include <gmpxx.h>

#include <string>

namespace disres {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Arbitrary-precision rational, always kept in canonical form (gcd 1, positive denominator).
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// "num/den" with an explicit denominator, e.g. "3/1", "-1/36".
inline std::string rat_fraction_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace disres
