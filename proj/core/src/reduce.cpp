#include <disres/reduce.hpp>

namespace disres {

namespace {

void require_simple_poles(const RatFun& f) {
  if (!f.is_proper()) throw Error(ErrorCode::NotProper, "reduction needs a proper rational function");
  if (!is_squarefree(f.den())) throw Error(ErrorCode::NotSquarefree, "reduction needs a squarefree denominator");
}

// -sum_{i=0}^{l-1} sigma^i(u): delta of this is u - sigma^l(u).
RatFun telescoping_sum(const RatFun& u, long l) {
  RatFun sum;
  for (long i = 0; i < l; ++i) sum += sigma_pow(u, i);
  return -sum;
}

// Shift every layer of f onto the initial roots.
ReducedForm reduce_over_layers(const RatFun& f, const std::vector<std::pair<long, Poly>>& layers) {
  std::vector<Poly> factors;
  factors.reserve(layers.size());
  for (const auto& [l, bl] : layers) factors.push_back(bl);
  const auto numerators = parfrac(f, factors);

  ReducedForm out;
  for (std::size_t j = 0; j < layers.size(); ++j) {
    const long l = layers[j].first;
    RatFun piece(numerators[j], layers[j].second);
    if (piece.is_zero()) continue;
    out.reduced += sigma_pow(piece, l);
    if (l > 0) out.certificate += telescoping_sum(piece, l);
  }
#ifndef NDEBUG
  if (delta(out.certificate) != f - out.reduced) {
    throw Error(ErrorCode::InternalConsistency, "reduction certificate identity failed");
  }
#endif
  return out;
}

std::vector<std::pair<long, Poly>> layers_of(const Poly& initial, const Poly& target, const ShiftSet& s) {
  std::vector<std::pair<long, Poly>> layers;
  Poly b0 = gcd_monic(initial, target);
  if (b0.degree() >= 1) layers.emplace_back(0, std::move(b0));
  for (long l : s.shifts) {
    Poly bl = gcd_monic(taylor_shift(initial, Rat(-l)), target);
    if (bl.degree() >= 1) layers.emplace_back(l, std::move(bl));
  }
  return layers;
}

}  // namespace

Poly initial_roots_divisor(const Poly& b, const ShiftSet& shifts) {
  Poly g = Poly::constant(1);
  for (long l : shifts.shifts) g = lcm_monic(g, gcd_monic(b, taylor_shift(b, Rat(-l))));
  return monic(div_exact(b, g));
}

ShiftLayers shift_layers(const Poly& b) {
  const ShiftSet s = shift_set(b);
  ShiftLayers out;
  out.initial = initial_roots_divisor(b, s);
  out.layers = layers_of(out.initial, monic(b), s);
  return out;
}

ReducedForm simple_reduction(const RatFun& f) {
  require_simple_poles(f);
  if (f.is_zero()) return {};
  const Poly& b = f.den();
  const ShiftSet s = shift_set(b);
  if (s.empty()) return {f, RatFun()};
  const Poly b0 = initial_roots_divisor(b, s);
  return reduce_over_layers(f, layers_of(b0, b, s));
}

JointReducedForms simple_reduction_plus(std::span<const RatFun> fs) {
  std::vector<Poly> dens;
  dens.reserve(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    try {
      require_simple_poles(fs[i]);
    } catch (const Error& e) {
      throw IndexedError(e.code(), i, e.what());
    }
    dens.push_back(fs[i].den());
  }
  JointReducedForms out;
  out.reduced.assign(fs.begin(), fs.end());
  out.certificates.assign(fs.size(), RatFun());

  const Poly b = lcm_monic(dens);
  const ShiftSet s = shift_set(b);
  if (s.empty()) return out;
  const Poly b0 = initial_roots_divisor(b, s);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].is_zero()) continue;
    auto r = reduce_over_layers(fs[i], layers_of(b0, fs[i].den(), s));
    out.reduced[i] = std::move(r.reduced);
    out.certificates[i] = std::move(r.certificate);
  }
  return out;
}

}  // namespace disres
