#pragma once

#include <disres/poly.hpp>

#include <span>
#include <string>
#include <vector>

namespace disres {

/// Reduced rational function num/den over Q with monic denominator.
/// Zero is represented as 0/1.
class RatFun {
 public:
  RatFun() : den_(Poly::constant(1)) {}
  /// Normalizes: cancels the gcd and makes the denominator monic.
  /// Throws ZeroDenominator.
  RatFun(Poly num, Poly den);
  explicit RatFun(Poly p) : num_(std::move(p)), den_(Poly::constant(1)) {}

  /// Skips normalization; num and den must already be coprime with den monic.
  static RatFun from_reduced(Poly num, Poly den);
  static RatFun constant(const Rat& c) { return RatFun(Poly::constant(c)); }
  static RatFun x() { return RatFun(Poly::x()); }

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }
  bool is_proper() const noexcept { return num_.degree() < den_.degree(); }
  /// True for nonzero constants and zero.
  bool is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() == 0; }

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& rhs);
  RatFun& operator-=(const RatFun& rhs);
  RatFun& operator*=(const RatFun& rhs);
  RatFun& operator/=(const RatFun& rhs);

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend RatFun operator*(const Rat& c, const RatFun& f);
  friend bool operator==(const RatFun& a, const RatFun& b) = default;

  /// Integer power; negative exponents invert (ZeroDenominator for 0^-n).
  RatFun pow(long e) const;
  Rat operator()(const Rat& at) const;

  std::string to_string(std::string_view var = "x") const;

 private:
  Poly num_;
  Poly den_;
};

/// Same as the constructor; kept as a named operation.
RatFun normalize(Poly num, Poly den);

struct ProperSplit {
  Poly polynomial_part;
  RatFun proper;
};

/// f = polynomial_part + proper with proper.num degree < proper.den degree.
ProperSplit proper_split(const RatFun& f);

/// Partial fractions of a proper f over a pre-factored squarefree denominator.
/// factors must be monic, non-constant, pairwise coprime and multiply to den(f).
/// Returns the numerators a_i with f = sum a_i / factors[i], deg(a_i) < deg(factors[i]).
std::vector<Poly> parfrac(const RatFun& f, std::span<const Poly> factors);

/// f(x + shift).
RatFun sigma_pow(const RatFun& f, long shift);
/// Forward difference f(x+1) - f(x).
RatFun delta(const RatFun& f);
/// d/dx f.
RatFun d_dx(const RatFun& f);
/// n-th derivative.
RatFun d_dx(const RatFun& f, unsigned n);

/// True when f is proper and its denominator is squarefree.
bool has_simple_poles(const RatFun& f);

}  // namespace disres
