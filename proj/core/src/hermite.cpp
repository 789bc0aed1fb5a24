#include <disres/hermite.hpp>

namespace disres {

HermiteSplit hermite_reduction(const RatFun& f) {
  if (!f.is_proper()) throw Error(ErrorCode::NotProper, "Hermite reduction needs a proper rational function");
  if (f.is_zero()) return {RatFun(), RatFun()};

  const auto factors = squarefree_decomposition(f.den());
  if (factors.size() <= 1) return {RatFun(), f};

  Poly a = f.num();
  Poly d = f.den();
  RatFun g;
  for (std::size_t idx = 1; idx < factors.size(); ++idx) {
    const Poly& v = factors[idx];
    if (v.degree() < 1) continue;
    const auto mult = static_cast<unsigned>(idx + 1);
    const Poly u = div_exact(d, pow(v, mult));
    const Poly uv = u * derivative(v);
    for (unsigned j = mult - 1; j >= 1; --j) {
      // b*u*v' + c*v = -a/j
      auto [b, c] = solve_bezout(uv, v, a * Rat(-1, j));
      g += RatFun(b, pow(v, j));
      a = c * Rat(-static_cast<long>(j)) - u * derivative(b);
    }
    d = u * v;
  }
  return {std::move(g), RatFun(std::move(a), std::move(d))};
}

HermiteList hermite_list(const RatFun& f) {
  if (!f.is_proper()) throw Error(ErrorCode::NotProper, "HermiteList needs a proper rational function");
  if (f.is_zero()) throw Error(ErrorCode::ZeroInput, "HermiteList of zero");
  HermiteList out;
  RatFun g = f;
  // After pass k the remainder is pre-scaled by -k so that the next component
  // comes out already multiplied by (-1)^k k!.
  long k = 0;
  while (!g.is_zero()) {
    auto [next, h] = hermite_reduction(g);
    out.components.push_back(std::move(h));
    ++k;
    g = Rat(-k) * next;
  }
  return out;
}

RatFun HermiteList::reconstruct() const {
  RatFun sum;
  Rat factorial = 1;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto k = static_cast<unsigned>(i);  // derivative order k-1 for component k
    if (k > 0) factorial *= k;
    Rat c = 1 / factorial;
    if (k % 2 == 1) c = -c;
    sum += c * d_dx(components[i], k);
  }
  return sum;
}

}  // namespace disres
