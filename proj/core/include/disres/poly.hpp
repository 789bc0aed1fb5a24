#pragma once

#include <disres/error.hpp>
#include <disres/rat.hpp>

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace disres {

/// Dense univariate polynomial over Q.
///
/// Coefficient i multiplies x^i. The coefficient vector never carries trailing
/// zeros, so the zero polynomial is the empty vector and has degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs);

  static Poly constant(const Rat& c);
  static Poly monomial(const Rat& c, int degree);
  /// The identity polynomial x.
  static Poly x();
  /// x - root.
  static Poly linear(const Rat& root);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_one() const;
  bool is_monic() const;

  /// Coefficient of x^i; zero outside the stored range.
  Rat coeff(int i) const;
  /// Leading coefficient; zero for the zero polynomial.
  Rat lc() const;
  const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }

  Rat operator()(const Rat& at) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rat& scalar);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Poly operator*(const Rat& lhs, Poly rhs) { return rhs *= lhs; }
  friend bool operator==(const Poly& lhs, const Poly& rhs) = default;

  /// Multiply by x^k.
  Poly shifted_up(int k) const;

  /// Human-readable form in variable `var`, e.g. "x^2 - 3*x + 1/2".
  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

struct DivRem {
  Poly quotient;
  Poly remainder;
};

struct XGcd {
  Poly g;  ///< monic gcd
  Poly s;
  Poly t;  ///< s*a + t*b == g
};

/// Long division: a = q*b + r with deg(r) < deg(b). Throws DivisionByZeroPoly.
DivRem divrem(const Poly& a, const Poly& b);
Poly rem(const Poly& a, const Poly& b);
Poly quo(const Poly& a, const Poly& b);
/// Division that must leave no remainder; a nonzero remainder is an internal error.
Poly div_exact(const Poly& a, const Poly& b);

Poly monic(const Poly& p);
Poly pow(const Poly& p, unsigned n);

/// Monic gcd; gcd(a, 0) = monic(a). Throws BothZero.
Poly gcd_monic(const Poly& a, const Poly& b);
Poly lcm_monic(const Poly& a, const Poly& b);
Poly lcm_monic(std::span<const Poly> ps);

/// Extended Euclid over Q. For equal inputs the result is (monic(a), 0, 1/lc(b)).
XGcd xgcd(const Poly& a, const Poly& b);

/// Solve s*a + t*b = c with deg(s) < deg(b), for coprime a and b.
std::pair<Poly, Poly> solve_bezout(const Poly& a, const Poly& b, const Poly& c);

/// Inverse of a modulo m (gcd must be 1); result has degree < deg(m).
Poly inverse_mod(const Poly& a, const Poly& m);

Poly derivative(const Poly& p);
/// p(x + c).
Poly taylor_shift(const Poly& p, const Rat& c);

/// monic(b / gcd(b, b')). Throws ZeroInput.
Poly squarefree_part(const Poly& b);
bool is_squarefree(const Poly& b);

/// Yun's algorithm: factors[i] is the monic product of irreducible factors of
/// multiplicity i+1 (may be 1). The list ends with a non-constant factor.
std::vector<Poly> squarefree_decomposition(const Poly& b);

/// Res_x(a, b) via the subresultant PRS on primitive integer forms.
Rat resultant(const Poly& a, const Poly& b);

/// R(z) = Res_x(b(x), b(x+z)) by evaluation at deg(b)^2+1 integer points and
/// Newton interpolation. Throws DegreeTooSmall when deg(b) < 2.
Poly shift_resultant(const Poly& b);

/// Res_x(b(x), a(x) - z*b'(x)) as a polynomial in z, by evaluation/interpolation.
Poly residue_resultant(const Poly& a, const Poly& b);

/// Newton interpolation through (xs[i], ys[i]); xs pairwise distinct.
Poly interpolate(std::span<const Rat> xs, std::span<const Rat> ys);

/// All integer roots of p in ascending order. Throws ZeroInput.
std::vector<Int> integer_roots(const Poly& p);

/// Scale p to a primitive integer polynomial; returns the integer coefficients
/// (positive leading coefficient) and the rational factor `scale` with
/// p = scale * result.
std::pair<std::vector<Int>, Rat> primitive_integer_form(const Poly& p);

}  // namespace disres
