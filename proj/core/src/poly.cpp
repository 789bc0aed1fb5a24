#include <disres/poly.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace disres {

namespace {

// Integer polynomials used internally by gcd and resultant computations.
using ZPoly = std::vector<Int>;

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

Int zcontent(const ZPoly& p) {
  Int g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void zmake_primitive(ZPoly& p) {
  if (p.empty()) return;
  Int g = zcontent(p);
  if (p.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

// lc(b)^(deg a - deg b + 1) * a mod b, computed exactly.
ZPoly zprem(ZPoly a, const ZPoly& b) {
  const int db = zdeg(b);
  int steps = zdeg(a) - db + 1;
  const Int& lb = b.back();
  Int t;
  while (!a.empty() && zdeg(a) >= db) {
    const int shift = zdeg(a) - db;
    const Int la = a.back();
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= db; ++i) {
      t = la * b[i];
      a[i + shift] -= t;
    }
    ztrim(a);
    --steps;
  }
  if (steps > 0) {
    Int f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(steps));
    for (auto& c : a) c *= f;
  }
  return a;
}

Int zpow(const Int& base, long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

// Subresultant PRS resultant of integer polynomials (both nonzero).
Int zresultant(ZPoly a, ZPoly b) {
  if (a.empty() || b.empty()) return 0;
  Int s = 1;
  if (zdeg(a) < zdeg(b)) {
    if ((zdeg(a) % 2 == 1) && (zdeg(b) % 2 == 1)) s = -1;
    std::swap(a, b);
  }
  if (zdeg(b) == 0) return s * zpow(b[0], zdeg(a));

  Int ca = zcontent(a);
  Int cb = zcontent(b);
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), ca.get_mpz_t());
  for (auto& c : b) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());
  Int t = zpow(ca, zdeg(b)) * zpow(cb, zdeg(a));

  Int g = 1;
  Int h = 1;
  for (;;) {
    const int delta = zdeg(a) - zdeg(b);
    if ((zdeg(a) % 2 == 1) && (zdeg(b) % 2 == 1)) s = -s;
    ZPoly r = zprem(a, b);
    if (r.empty()) return 0;
    a = std::move(b);
    Int divisor = g * zpow(h, delta);
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    b = std::move(r);
    g = a.back();
    // h <- g^delta / h^(delta-1)
    if (delta == 0) {
      // h^(1) * g^0 = h
    } else {
      Int num = zpow(g, delta);
      Int den = zpow(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (zdeg(b) == 0) {
      const int da = zdeg(a);
      Int num = zpow(b[0], da);
      Int den = zpow(h, da - 1);
      Int res;
      mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      return s * t * res;
    }
  }
}

Int lcm_of_denominators(const Poly& p) {
  Int l = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  return l;
}

Poly from_zpoly(const ZPoly& z) {
  std::vector<Rat> c;
  c.reserve(z.size());
  for (const auto& v : z) c.emplace_back(v);
  return Poly(std::move(c));
}

}  // namespace

// ---------------------------------------------------------------------------
// Poly members

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, int degree) {
  if (c == 0) return {};
  std::vector<Rat> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::x() { return monomial(1, 1); }

Poly Poly::linear(const Rat& root) { return Poly(std::vector<Rat>{-root, 1}); }

bool Poly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

bool Poly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

Rat Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rat Poly::lc() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

Rat Poly::operator()(const Rat& at) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rat> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  // Integer fast path: most intermediate products have integral coefficients.
  const bool integral =
      std::all_of(lhs.coeffs_.begin(), lhs.coeffs_.end(), is_integer) &&
      std::all_of(rhs.coeffs_.begin(), rhs.coeffs_.end(), is_integer);
  if (integral) {
    std::vector<Int> acc(out.size());
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
      const auto& a = lhs.coeffs_[i].get_num();
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
        mpz_addmul(acc[i + j].get_mpz_t(), a.get_mpz_t(), rhs.coeffs_[j].get_num_mpz_t());
      }
    }
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = Rat(acc[k]);
  } else {
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
      if (lhs.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
        out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
      }
    }
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) {
  *this = *this * rhs;
  return *this;
}

Poly& Poly::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Poly Poly::shifted_up(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Rat> v(static_cast<std::size_t>(k));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Poly(std::move(v));
}

std::string Poly::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (!unit) out << mag.get_str() << "*";
    out << var;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Division and gcds

DivRem divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rat> r = a.coeffs();
  const int db = b.degree();
  const auto& bc = b.coeffs();
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Rat inv_lc = 1 / b.lc();
  Rat t;
  for (int i = a.degree(); i >= db; --i) {
    Rat& top = r[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    Rat factor = top * inv_lc;
    const int shift = i - db;
    for (int j = 0; j < db; ++j) {
      t = factor * bc[static_cast<std::size_t>(j)];
      r[static_cast<std::size_t>(shift + j)] -= t;
    }
    top = 0;
    q[static_cast<std::size_t>(shift)] = std::move(factor);
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly rem(const Poly& a, const Poly& b) { return divrem(a, b).remainder; }

Poly quo(const Poly& a, const Poly& b) { return divrem(a, b).quotient; }

Poly div_exact(const Poly& a, const Poly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::InternalConsistency, "inexact polynomial division");
  return q;
}

Poly monic(const Poly& p) {
  if (p.is_zero() || p.is_monic()) return p;
  return p * Rat(1 / p.lc());
}

Poly pow(const Poly& p, unsigned n) {
  Poly result = Poly::constant(1);
  Poly base = p;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

std::pair<std::vector<Int>, Rat> primitive_integer_form(const Poly& p) {
  if (p.is_zero()) return {{}, Rat(1)};
  const Int l = lcm_of_denominators(p);
  ZPoly z;
  z.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Int v = c.get_num() * (l / c.get_den());
    z.push_back(std::move(v));
  }
  Int g = zcontent(z);
  if (z.back() < 0) g = -g;
  for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return {std::move(z), make_rat(g, l)};
}

Poly gcd_monic(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::BothZero, "gcd of two zero polynomials");
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Poly::constant(1);
  // Primitive PRS over Z.
  ZPoly x = primitive_integer_form(a).first;
  ZPoly y = primitive_integer_form(b).first;
  if (zdeg(x) < zdeg(y)) std::swap(x, y);
  while (!y.empty()) {
    if (zdeg(y) == 0) return Poly::constant(1);
    ZPoly r = zprem(x, y);
    zmake_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(from_zpoly(x));
}

Poly lcm_monic(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return monic(div_exact(a, gcd_monic(a, b)) * b);
}

Poly lcm_monic(std::span<const Poly> ps) {
  Poly l = Poly::constant(1);
  for (const auto& p : ps) {
    if (p.is_zero()) return {};
    l = lcm_monic(l, p);
  }
  return l;
}

XGcd xgcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::BothZero, "xgcd of two zero polynomials");
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(1), s1;
  Poly t0, t1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Rat inv = 1 / r0.lc();
  return {r0 * inv, s0 * inv, t0 * inv};
}

std::pair<Poly, Poly> solve_bezout(const Poly& a, const Poly& b, const Poly& c) {
  Poly a_red = rem(a, b);
  XGcd e = xgcd(a_red, b);
  if (!e.g.is_one()) throw Error(ErrorCode::InternalConsistency, "bezout solve on non-coprime inputs");
  Poly s = rem(e.s * c, b);
  Poly t = div_exact(c - s * a, b);
  return {std::move(s), std::move(t)};
}

Poly inverse_mod(const Poly& a, const Poly& m) {
  XGcd e = xgcd(rem(a, m), m);
  if (!e.g.is_one()) throw Error(ErrorCode::InternalConsistency, "polynomial not invertible modulo m");
  return rem(e.s, m);
}

// ---------------------------------------------------------------------------
// Calculus and shifts

Poly derivative(const Poly& p) {
  if (p.degree() <= 0) return {};
  std::vector<Rat> d(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) d[static_cast<std::size_t>(i - 1)] = p.coeffs()[static_cast<std::size_t>(i)] * i;
  return Poly(std::move(d));
}

Poly taylor_shift(const Poly& p, const Rat& c) {
  if (c == 0 || p.degree() <= 0) return p;
  std::vector<Rat> a = p.coeffs();
  const int n = p.degree();
  Rat t;
  for (int i = 0; i < n; ++i) {
    for (int j = n - 1; j >= i; --j) {
      t = c * a[static_cast<std::size_t>(j + 1)];
      a[static_cast<std::size_t>(j)] += t;
    }
  }
  return Poly(std::move(a));
}

Poly squarefree_part(const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroInput, "squarefree part of the zero polynomial");
  if (b.is_constant()) return Poly::constant(1);
  return monic(div_exact(b, gcd_monic(b, derivative(b))));
}

bool is_squarefree(const Poly& b) {
  if (b.is_zero()) return false;
  if (b.is_constant()) return true;
  return gcd_monic(b, derivative(b)).is_one();
}

std::vector<Poly> squarefree_decomposition(const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroInput, "squarefree decomposition of the zero polynomial");
  std::vector<Poly> out;
  if (b.is_constant()) return out;
  const Poly f = monic(b);
  const Poly df = derivative(f);
  const Poly a0 = gcd_monic(f, df);
  Poly bi = div_exact(f, a0);
  Poly ci = div_exact(df, a0);
  Poly di = ci - derivative(bi);
  while (!bi.is_constant()) {
    Poly ai = gcd_monic(bi, di);
    bi = div_exact(bi, ai);
    ci = div_exact(di, ai);
    di = ci - derivative(bi);
    out.push_back(monic(ai));
  }
  while (!out.empty() && out.back().is_constant()) out.pop_back();
  return out;
}

// ---------------------------------------------------------------------------
// Resultants and interpolation

Rat resultant(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  auto [za, sa] = primitive_integer_form(a);
  auto [zb, sb] = primitive_integer_form(b);
  Rat scale = 1;
  for (int i = 0; i < b.degree(); ++i) scale *= sa;
  for (int i = 0; i < a.degree(); ++i) scale *= sb;
  return scale * Rat(zresultant(std::move(za), std::move(zb)));
}

Poly interpolate(std::span<const Rat> xs, std::span<const Rat> ys) {
  const std::size_t n = xs.size();
  std::vector<Rat> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    }
  }
  // Horner on the Newton form.
  Poly result;
  for (std::size_t i = n; i-- > 0;) {
    result *= Poly::linear(xs[i]);
    result += Poly::constant(dd[i]);
  }
  return result;
}

namespace {

// 0, 1, -1, 2, -2, ...
std::vector<Rat> symmetric_points(std::size_t count) {
  std::vector<Rat> pts;
  pts.reserve(count);
  for (long k = 0; pts.size() < count; ++k) {
    if (k == 0) {
      pts.emplace_back(0);
      continue;
    }
    pts.emplace_back(k);
    if (pts.size() < count) pts.emplace_back(-k);
  }
  return pts;
}

}  // namespace

Poly shift_resultant(const Poly& b) {
  if (b.degree() < 2) throw Error(ErrorCode::DegreeTooSmall, "shift resultant needs deg(b) >= 2");
  const auto n = static_cast<std::size_t>(b.degree());
  const auto pts = symmetric_points(n * n + 1);
  std::vector<Rat> vals;
  vals.reserve(pts.size());
  for (const auto& z : pts) vals.push_back(resultant(b, taylor_shift(b, z)));
  return interpolate(pts, vals);
}

Poly residue_resultant(const Poly& a, const Poly& b) {
  if (b.degree() < 1) throw Error(ErrorCode::DegreeTooSmall, "residue resultant needs deg(b) >= 1");
  const Poly db = derivative(b);
  const auto pts = symmetric_points(static_cast<std::size_t>(b.degree()) + 1);
  std::vector<Rat> vals;
  vals.reserve(pts.size());
  // Resultant at the formal degree of a - z*b'; cancellation of the leading
  // term at some z would otherwise drop powers of lc(b).
  const int m = std::max(a.degree(), b.degree() - 1);
  for (const auto& z : pts) {
    const Poly g = a - db * z;
    if (g.is_zero()) {
      vals.emplace_back(0);
      continue;
    }
    Rat r = resultant(b, g);
    Rat scale = 1;
    for (int i = 0; i < m - g.degree(); ++i) scale *= b.lc();
    vals.push_back(r * scale);
  }
  return interpolate(pts, vals);
}

// ---------------------------------------------------------------------------
// Integer roots

namespace {

double log2_abs(const Int& v) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log2(std::fabs(mant)) + static_cast<double>(exp);
}

Int zeval(const ZPoly& p, const Int& at) {
  Int acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

// Upper bound on the modulus of any complex root of p (p[0] != 0, deg >= 1):
// the smaller of the Cauchy and Fujiwara bounds, rounded up with a safety margin.
double root_bound_log2(const ZPoly& p) {
  const int n = zdeg(p);
  const double lan = log2_abs(p.back());
  double cauchy = 0.0;  // log2 of max |a_i / a_n|
  double fujiwara = -std::numeric_limits<double>::infinity();
  bool any = false;
  for (int i = 0; i < n; ++i) {
    if (p[static_cast<std::size_t>(i)] == 0) continue;
    const double l = log2_abs(p[static_cast<std::size_t>(i)]) - lan;
    cauchy = any ? std::max(cauchy, l) : l;
    any = true;
    const int k = n - i;
    const double term = (i == 0 ? l - 1.0 : l) / k;
    fujiwara = std::max(fujiwara, term);
  }
  const double cauchy_bound = std::log2(1.0 + std::exp2(cauchy));
  const double fujiwara_bound = 1.0 + fujiwara;
  return std::min(cauchy_bound, fujiwara_bound);
}

// Sturm-sequence based fallback for very large root bounds: isolate real roots
// in [-bound, bound] by bisection on integer endpoints.
struct Sturm {
  std::vector<Poly> seq;

  explicit Sturm(const Poly& p) {
    seq.push_back(p);
    seq.push_back(derivative(p));
    while (!seq.back().is_zero()) {
      Poly r = -rem(seq[seq.size() - 2], seq.back());
      if (r.is_zero()) break;
      seq.push_back(std::move(r));
    }
  }

  int variations(const Rat& at) const {
    int count = 0;
    int prev = 0;
    for (const auto& s : seq) {
      const int sg = sgn(s(at));
      if (sg == 0) continue;
      if (prev != 0 && sg != prev) ++count;
      prev = sg;
    }
    return count;
  }
};

void collect_sturm_roots(const Sturm& st, const ZPoly& p, const Int& lo, const Int& hi, int vlo, int vhi,
                         std::vector<Int>& out) {
  // roots in (lo, hi]
  const int count = vlo - vhi;
  if (count == 0) return;
  if (hi - lo <= 1) {
    if (zeval(p, hi) == 0) out.push_back(hi);
    return;
  }
  Int mid = lo + (hi - lo) / 2;
  const int vmid = st.variations(Rat(mid));
  collect_sturm_roots(st, p, lo, mid, vlo, vmid, out);
  collect_sturm_roots(st, p, mid, hi, vmid, vhi, out);
}

}  // namespace

std::vector<Int> integer_roots(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "integer roots of the zero polynomial");
  ZPoly z = primitive_integer_form(p).first;
  std::vector<Int> roots;
  std::size_t v = 0;
  while (v < z.size() && z[v] == 0) ++v;
  if (v > 0) {
    roots.emplace_back(0);
    z.erase(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(v));
  }
  if (zdeg(z) >= 1) {
    const double lb = root_bound_log2(z);
    constexpr double kEnumerationLimitLog2 = 22.0;  // about 4 million candidates
    if (lb <= kEnumerationLimitLog2) {
      const auto bound = static_cast<unsigned long>(std::ceil(std::exp2(lb) * (1.0 + 1e-9))) + 1;
      const Int& a0 = z.front();
      for (unsigned long d = 1; d <= bound; ++d) {
        if (mpz_divisible_ui_p(a0.get_mpz_t(), d) == 0) continue;
        Int cand(d);
        if (zeval(z, cand) == 0) roots.push_back(cand);
        Int neg = -cand;
        if (zeval(z, neg) == 0) roots.push_back(neg);
      }
    } else {
      // Work on the squarefree part so the Sturm sequence counts distinct roots.
      const Poly sq = squarefree_part(from_zpoly(z));
      ZPoly zs = primitive_integer_form(sq).first;
      Sturm st(sq);
      Int hi;
      mpz_ui_pow_ui(hi.get_mpz_t(), 2, static_cast<unsigned long>(std::ceil(lb)) + 1);
      Int lo = -hi - 1;
      collect_sturm_roots(st, zs, lo, hi, st.variations(Rat(lo)), st.variations(Rat(hi)), roots);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace disres
