#include <disres/ratfun.hpp>

namespace disres {

RatFun::RatFun(Poly num, Poly den) {
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  if (den.degree() > 0 && num.degree() >= 0) {
    Poly g = gcd_monic(num, den);
    if (!g.is_one()) {
      num = div_exact(num, g);
      den = div_exact(den, g);
    }
  }
  const Rat inv = 1 / den.lc();
  num_ = std::move(num);
  den_ = std::move(den);
  if (inv != 1) {
    num_ *= inv;
    den_ *= inv;
  }
}

RatFun RatFun::from_reduced(Poly num, Poly den) {
  RatFun r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

RatFun normalize(Poly num, Poly den) { return RatFun(std::move(num), std::move(den)); }

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun& RatFun::operator+=(const RatFun& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    *this = RatFun(num_ + rhs.num_, den_);
    return *this;
  }
  const Poly g = gcd_monic(den_, rhs.den_);
  if (g.is_one()) {
    *this = RatFun(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  } else {
    const Poly dl = div_exact(den_, g);
    const Poly dr = div_exact(rhs.den_, g);
    *this = RatFun(num_ * dr + rhs.num_ * dl, dl * rhs.den_);
  }
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& rhs) { return *this += -rhs; }

RatFun& RatFun::operator*=(const RatFun& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = RatFun();
  // Cross-cancel before multiplying to keep the gcd small.
  const Poly g1 = gcd_monic(num_, rhs.den_);
  const Poly g2 = gcd_monic(rhs.num_, den_);
  Poly n = div_exact(num_, g1) * div_exact(rhs.num_, g2);
  Poly d = div_exact(den_, g2) * div_exact(rhs.den_, g1);
  *this = RatFun(std::move(n), std::move(d));
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by the zero rational function");
  return *this *= RatFun(rhs.den_, rhs.num_);
}

RatFun operator*(const Rat& c, const RatFun& f) {
  if (c == 0 || f.is_zero()) return RatFun();
  RatFun r = f;
  r.num_ *= c;
  return r;
}

RatFun RatFun::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw Error(ErrorCode::ZeroDenominator, "negative power of zero");
    return RatFun(disres::pow(den_, static_cast<unsigned>(-e)), disres::pow(num_, static_cast<unsigned>(-e)));
  }
  if (is_zero()) return e == 0 ? constant(1) : RatFun();
  // num and den stay coprime under powers.
  return from_reduced(disres::pow(num_, static_cast<unsigned>(e)), disres::pow(den_, static_cast<unsigned>(e)));
}

Rat RatFun::operator()(const Rat& at) const {
  const Rat d = den_(at);
  if (d == 0) throw Error(ErrorCode::ZeroDenominator, "evaluation at a pole");
  return num_(at) / d;
}

std::string RatFun::to_string(std::string_view var) const {
  if (is_polynomial()) return num_.to_string(var);
  const auto& nc = num_.coeffs();
  std::size_t terms = 0;
  for (const auto& c : nc) terms += (c != 0);
  std::string n = num_.to_string(var);
  if (terms > 1) n = "(" + n + ")";
  std::size_t dterms = 0;
  for (const auto& c : den_.coeffs()) dterms += (c != 0);
  std::string d = den_.to_string(var);
  if (dterms > 1 || den_.degree() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

ProperSplit proper_split(const RatFun& f) {
  if (f.is_proper()) return {Poly{}, f};
  auto [q, r] = divrem(f.num(), f.den());
  // r and den stay coprime.
  return {std::move(q), RatFun(std::move(r), f.den())};
}

std::vector<Poly> parfrac(const RatFun& f, std::span<const Poly> factors) {
  if (!f.is_proper()) throw Error(ErrorCode::NotProper, "parfrac needs a proper rational function");
  const Poly& b = f.den();
  if (!is_squarefree(b)) throw Error(ErrorCode::NotSquarefree, "parfrac needs a squarefree denominator");
  Poly product = Poly::constant(1);
  for (const auto& q : factors) {
    if (q.degree() < 1 || !q.is_monic()) {
      throw Error(ErrorCode::ProductMismatch, "parfrac factors must be monic and non-constant");
    }
    product *= q;
  }
  if (product != b) throw Error(ErrorCode::ProductMismatch, "factors do not multiply to the denominator");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      if (!gcd_monic(factors[i], factors[j]).is_one()) {
        throw Error(ErrorCode::FactorsNotCoprime, "parfrac factors share a root");
      }
    }
  }
  std::vector<Poly> out;
  out.reserve(factors.size());
  for (const auto& bi : factors) {
    // d_i * (b / b_i) + e_i * b_i = 1, a_i = a * d_i mod b_i
    const Poly cofactor = div_exact(b, bi);
    const Poly d = inverse_mod(cofactor, bi);
    out.push_back(rem(rem(f.num(), bi) * d, bi));
  }
  return out;
}

RatFun sigma_pow(const RatFun& f, long shift) {
  if (shift == 0 || f.is_constant()) return f;
  const Rat c(shift);
  // Shifting preserves coprimality and monicity.
  return RatFun::from_reduced(taylor_shift(f.num(), c), taylor_shift(f.den(), c));
}

RatFun delta(const RatFun& f) { return sigma_pow(f, 1) - f; }

RatFun d_dx(const RatFun& f) {
  if (f.is_polynomial()) return RatFun(derivative(f.num()));
  const Poly& a = f.num();
  const Poly& b = f.den();
  return RatFun(derivative(a) * b - a * derivative(b), b * b);
}

RatFun d_dx(const RatFun& f, unsigned n) {
  RatFun r = f;
  for (unsigned i = 0; i < n; ++i) r = d_dx(r);
  return r;
}

bool has_simple_poles(const RatFun& f) { return f.is_proper() && is_squarefree(f.den()); }

}  // namespace disres
