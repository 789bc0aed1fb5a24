#pragma once

#include <disres/hermite.hpp>
#include <disres/ratfun.hpp>

#include <span>
#include <vector>

namespace disres {

/// (B, D): B monic, squarefree, shiftfree; deg D < deg B. D evaluated at a
/// root of B is the discrete residue at that root's orbit. (1, 0) means all
/// residues of this order vanish.
struct ResiduePair {
  Poly B = Poly::constant(1);
  Poly D;

  bool is_trivial() const { return B.is_one() && D.is_zero(); }
  friend bool operator==(const ResiduePair&, const ResiduePair&) = default;
};

/// pairs[k-1] describes the order-k discrete residues.
struct ResidueSystem {
  std::vector<ResiduePair> pairs;

  std::size_t order() const noexcept { return pairs.size(); }
  friend bool operator==(const ResidueSystem&, const ResidueSystem&) = default;
};

/// One B shared by every input and order: D[i][k-1] for input i, order k.
struct SharedResidueSystem {
  Poly B = Poly::constant(1);
  std::vector<std::vector<Poly>> D;

  std::size_t size() const noexcept { return D.size(); }
  std::size_t order() const noexcept { return D.empty() ? 0 : D.front().size(); }
};

/// Trager's residue polynomial of a proper f with squarefree denominator b:
/// r * b' == numer(f) (mod b), deg r < deg b. Zero maps to (1, 0).
ResiduePair first_residues(const RatFun& f);

struct FirstResiduesPlus {
  Poly B;
  std::vector<Poly> residues;
};

/// Residue polynomials of several functions over B = lcm of their denominators:
/// p_i * b_i' == a_i (mod b_i) and p_i == 0 (mod B / b_i).
FirstResiduesPlus first_residues_plus(std::span<const RatFun> fs);

/// Rational system of discrete residues of a nonzero proper f.
ResidueSystem discrete_residues(const RatFun& f);

/// Compatible residue systems of nonzero proper f_1..f_n over a single B.
SharedResidueSystem discrete_residues_plus(std::span<const RatFun> fs);

namespace detail {
/// Same as discrete_residues_plus but zero inputs are allowed; they contribute
/// an all-zero row. Also reports each input's Hermite length.
SharedResidueSystem shared_residues(std::span<const RatFun> fs, std::vector<std::size_t>* orders = nullptr);
}  // namespace detail

}  // namespace disres
