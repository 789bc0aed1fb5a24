#include <disres/dispersion.hpp>

namespace disres {

namespace {

// T with T(z^2) = p(z) for an even polynomial p.
Poly even_part_in_square(const Poly& p) {
  std::vector<Rat> t;
  t.reserve(static_cast<std::size_t>(p.degree() / 2 + 1));
  for (int i = 0; i <= p.degree(); i += 2) t.push_back(p.coeff(i));
  for (int i = 1; i <= p.degree(); i += 2) {
    if (p.coeff(i) != 0) throw Error(ErrorCode::InternalConsistency, "reduced shift resultant is not even");
  }
  return Poly(std::move(t));
}

}  // namespace

ShiftSet shift_set(const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroInput, "ShiftSet of the zero polynomial");
  if (b.degree() <= 1) return {};
  if (!is_squarefree(b)) throw Error(ErrorCode::NotSquarefree, "ShiftSet needs a squarefree polynomial");

  // For squarefree b, R = z^deg(b) * (even polynomial with no root at 0).
  const Poly r = shift_resultant(b);
  const auto& rc = r.coeffs();
  const auto low = static_cast<std::size_t>(b.degree());
  for (std::size_t i = 0; i <= low && i < rc.size(); ++i) {
    if ((rc[i] == 0) != (i < low)) throw Error(ErrorCode::InternalConsistency, "shift resultant has the wrong order at 0");
  }
  const Poly t = even_part_in_square(Poly(std::vector<Rat>(rc.begin() + static_cast<std::ptrdiff_t>(low), rc.end())));

  ShiftSet out;
  if (t.degree() < 1) return out;
  for (const auto& n : integer_roots(t)) {
    if (n <= 0) continue;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) continue;
    Int root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    out.shifts.push_back(root.get_si());
  }
  return out;  // integer_roots is ascending, so are the square roots
}

long pdisp(const RatFun& f) {
  if (f.den().degree() < 1) throw Error(ErrorCode::ConstantDenominator, "pdisp needs a non-constant denominator");
  return shift_set(squarefree_part(f.den())).dispersion();
}

}  // namespace disres
