#pragma once

#include <disres/linalg.hpp>
#include <disres/ratfun.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace disres {

/// Linear differential operator sum_j coeffs[j] * (d/dx)^j with rational
/// constant coefficients. No trailing zeros; the zero operator is empty.
class DiffOp {
 public:
  DiffOp() = default;
  explicit DiffOp(std::vector<Rat> coeffs);
  static DiffOp identity() { return DiffOp({Rat(1)}); }
  /// (d/dx)^j
  static DiffOp derivative(unsigned j);

  const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }
  Rat coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Rat(0); }
  /// -1 for the zero operator.
  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  RatFun apply(const RatFun& f) const;

  friend DiffOp operator+(const DiffOp& a, const DiffOp& b);
  /// Composition; constant coefficients make it commutative.
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
  friend DiffOp operator*(const Rat& c, const DiffOp& a);
  friend bool operator==(const DiffOp&, const DiffOp&) = default;

  std::string to_string() const;

 private:
  std::vector<Rat> coeffs_;
};

/// (L_1, ..., L_n), acting on (f_1, ..., f_n) as sum_i L_i(f_i).
struct OperatorTuple {
  std::vector<DiffOp> ops;

  RatFun apply(std::span<const RatFun> fs) const;
  friend bool operator==(const OperatorTuple&, const OperatorTuple&) = default;
};

struct SummabilityVerdict {
  bool summable = false;
  /// Present iff summable; delta(*certificate) equals the input.
  std::optional<RatFun> certificate;
};

/// Decides f = g(x+1) - g(x) for some rational g. Throws NonzeroPolynomialPart.
SummabilityVerdict is_summable(const RatFun& f);

/// Basis of {v in Q^n : sum v_i f_i is summable}, in reduced echelon form.
RatMatrix vspace_basis(std::span<const RatFun> fs);

/// Basis of the tuples in W(fs) with every order <= beta.
std::vector<OperatorTuple> wspace_bounded(std::span<const RatFun> fs, unsigned beta);

/// Basis of the tuples with ord(L_i) <= m - m_i, where m_i is the Hermite length
/// of f_i and m the maximum; they generate W(fs) over Q[d/dx].
std::vector<OperatorTuple> wspace_generators(std::span<const RatFun> fs);

/// Membership of a tuple in W(fs), checked only on the orders k <= max(ord(L_i) + m_i).
bool in_wspace(std::span<const RatFun> fs, const OperatorTuple& ops);

}  // namespace disres
