#include <disres/reduce.hpp>
#include <disres/residues.hpp>

#include <algorithm>

namespace disres {

namespace {

void require_simple_poles(const RatFun& f) {
  if (!f.is_proper()) throw Error(ErrorCode::NotProper, "residues need a proper rational function");
  if (!is_squarefree(f.den())) throw Error(ErrorCode::NotSquarefree, "residues need a squarefree denominator");
}

}  // namespace

ResiduePair first_residues(const RatFun& f) {
  require_simple_poles(f);
  if (f.is_zero()) return {};
  const Poly& b = f.den();
  const Poly inv = inverse_mod(derivative(b), b);
  return {b, rem(f.num() * inv, b)};
}

FirstResiduesPlus first_residues_plus(std::span<const RatFun> fs) {
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
  FirstResiduesPlus out;
  out.B = lcm_monic(dens);
  out.residues.reserve(fs.size());
  for (const auto& f : fs) {
    if (f.is_zero()) {
      out.residues.emplace_back();
      continue;
    }
    const Poly r = first_residues(f).D;
    if (f.den() == out.B) {
      out.residues.push_back(r);
      continue;
    }
    // CRT: p = d * ((r / d) mod b) with d = B / b.
    const Poly d = div_exact(out.B, f.den());
    const Poly q = rem(r * inverse_mod(d, f.den()), f.den());
    out.residues.push_back(d * q);
  }
  return out;
}

ResidueSystem discrete_residues(const RatFun& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroInput, "discrete residues of zero");
  if (!f.is_proper()) throw Error(ErrorCode::NotProper, "discrete residues need a proper rational function");
  const HermiteList list = hermite_list(f);
  ResidueSystem out;
  out.pairs.reserve(list.order());
  for (const auto& component : list.components) {
    out.pairs.push_back(first_residues(simple_reduction(component).reduced));
  }
  return out;
}

namespace detail {

SharedResidueSystem shared_residues(std::span<const RatFun> fs, std::vector<std::size_t>* orders) {
  std::vector<std::vector<RatFun>> lists;
  lists.reserve(fs.size());
  std::size_t m = 0;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (!fs[i].is_proper()) throw IndexedError(ErrorCode::NotProper, i, "discrete residues need a proper rational function");
    if (fs[i].is_zero()) {
      lists.emplace_back();
    } else {
      lists.push_back(hermite_list(fs[i]).components);
    }
    m = std::max(m, lists.back().size());
  }
  if (orders != nullptr) {
    orders->clear();
    for (const auto& l : lists) orders->push_back(l.size());
  }
  // Flatten the zero-padded n x m grid row by row.
  std::vector<RatFun> grid;
  grid.reserve(fs.size() * m);
  for (auto& l : lists) {
    l.resize(m);
    grid.insert(grid.end(), l.begin(), l.end());
  }
  const auto joint = simple_reduction_plus(grid);
  const auto firsts = first_residues_plus(joint.reduced);

  SharedResidueSystem out;
  out.B = firsts.B;
  out.D.assign(fs.size(), std::vector<Poly>(m));
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t k = 0; k < m; ++k) out.D[i][k] = firsts.residues[i * m + k];
  }
  return out;
}

}  // namespace detail

SharedResidueSystem discrete_residues_plus(std::span<const RatFun> fs) {
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].is_zero()) throw IndexedError(ErrorCode::ZeroInput, i, "discrete residues of zero");
  }
  return detail::shared_residues(fs);
}

}  // namespace disres
