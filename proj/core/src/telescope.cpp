#include <disres/hermite.hpp>
#include <disres/reduce.hpp>
#include <disres/residues.hpp>
#include <disres/telescope.hpp>

#include <algorithm>

namespace disres {

DiffOp::DiffOp(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

DiffOp DiffOp::derivative(unsigned j) {
  std::vector<Rat> c(j + 1);
  c[j] = 1;
  return DiffOp(std::move(c));
}

RatFun DiffOp::apply(const RatFun& f) const {
  RatFun out;
  RatFun d = f;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (j > 0) d = d_dx(d);
    if (coeffs_[j] != 0) out += coeffs_[j] * d;
  }
  return out;
}

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
  std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = a.coeff(j) + b.coeff(j);
  return DiffOp(std::move(c));
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return DiffOp(std::move(c));
}

DiffOp operator*(const Rat& c, const DiffOp& a) {
  std::vector<Rat> out = a.coeffs_;
  for (auto& v : out) v *= c;
  return DiffOp(std::move(out));
}

std::string DiffOp::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Rat& c = coeffs_[j];
    if (c == 0) continue;
    std::string term;
    const Rat mag = abs(c);
    if (j == 0) {
      term = mag.get_str();
    } else {
      if (mag != 1) term = mag.get_str() + "*";
      term += j == 1 ? "D" : "D^" + std::to_string(j);
    }
    if (s.empty()) {
      s = c < 0 ? "-" + term : term;
    } else {
      s += (c < 0 ? " - " : " + ") + term;
    }
  }
  return s;
}

RatFun OperatorTuple::apply(std::span<const RatFun> fs) const {
  RatFun out;
  for (std::size_t i = 0; i < ops.size() && i < fs.size(); ++i) out += ops[i].apply(fs[i]);
  return out;
}

SummabilityVerdict is_summable(const RatFun& f) {
  if (!f.is_proper()) throw Error(ErrorCode::NonzeroPolynomialPart, "summability needs a proper rational function");
  if (f.is_zero()) return {true, RatFun()};
  const HermiteList list = hermite_list(f);
  RatFun cert;
  Rat factorial = 1;
  for (std::size_t i = 0; i < list.order(); ++i) {
    const ReducedForm rf = simple_reduction(list.components[i]);
    if (!rf.reduced.is_zero()) return {false, std::nullopt};
    if (i > 0) factorial *= static_cast<unsigned long>(i);
    Rat c = 1 / factorial;
    if (i % 2 == 1) c = -c;
    cert += c * d_dx(rf.certificate, static_cast<unsigned>(i));
  }
  if (delta(cert) != f) throw Error(ErrorCode::InternalConsistency, "summability certificate does not telescope");
  return {true, std::move(cert)};
}

namespace {

// Scalar equations sum_i sum_j lambda_{i,k-j} (-1)^j D_{i,j} / (j-1)! = 0 for
// k = 1..kmax, one per coefficient of x^t, t < deg B. Unknown (i, s) sits at
// column offsets[i] + s with 0 <= s <= bounds[i].
RatMatrix operator_equations(const SharedResidueSystem& sys, const std::vector<unsigned>& bounds,
                             std::size_t kmax, std::vector<std::size_t>& offsets, std::size_t& ncols) {
  const std::size_t n = sys.size();
  const std::size_t m = sys.order();
  offsets.assign(n, 0);
  ncols = 0;
  for (std::size_t i = 0; i < n; ++i) {
    offsets[i] = ncols;
    ncols += bounds[i] + 1;
  }
  const int degB = sys.B.degree();
  std::vector<Rat> weight(m + 1);  // (-1)^j / (j-1)!
  Rat fact = 1;
  for (std::size_t j = 1; j <= m; ++j) {
    if (j > 1) fact *= static_cast<unsigned long>(j - 1);
    weight[j] = (j % 2 == 0 ? Rat(1) : Rat(-1)) / fact;
  }

  RatMatrix rows;
  for (std::size_t k = 1; k <= kmax; ++k) {
    for (int t = 0; t < degB; ++t) {
      RatVector row(ncols);
      bool nonzero = false;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 1; j <= std::min(m, k); ++j) {
          const std::size_t s = k - j;
          if (s > bounds[i]) continue;
          const Rat c = sys.D[i][j - 1].coeff(t);
          if (c == 0) continue;
          row[offsets[i] + s] += weight[j] * c;
          nonzero = true;
        }
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<OperatorTuple> solve_operators(std::span<const RatFun> fs, const SharedResidueSystem& sys,
                                           const std::vector<unsigned>& bounds, std::size_t kmax) {
  std::vector<std::size_t> offsets;
  std::size_t ncols = 0;
  const RatMatrix eqs = operator_equations(sys, bounds, kmax, offsets, ncols);
  const RatMatrix basis = kernel_basis(eqs, ncols);
  std::vector<OperatorTuple> out;
  out.reserve(basis.size());
  for (const auto& v : basis) {
    OperatorTuple t;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      t.ops.emplace_back(std::vector<Rat>(v.begin() + static_cast<long>(offsets[i]),
                                          v.begin() + static_cast<long>(offsets[i] + bounds[i] + 1)));
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

RatMatrix vspace_basis(std::span<const RatFun> fs) {
  const SharedResidueSystem sys = discrete_residues_plus(fs);
  const std::size_t n = sys.size();
  const int degB = sys.B.degree();
  RatMatrix rows;
  for (std::size_t k = 0; k < sys.order(); ++k) {
    for (int t = 0; t < degB; ++t) {
      RatVector row(n);
      bool nonzero = false;
      for (std::size_t i = 0; i < n; ++i) {
        row[i] = sys.D[i][k].coeff(t);
        nonzero = nonzero || row[i] != 0;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  return kernel_basis(rows, n);
}

std::vector<OperatorTuple> wspace_bounded(std::span<const RatFun> fs, unsigned beta) {
  const SharedResidueSystem sys = discrete_residues_plus(fs);
  const std::vector<unsigned> bounds(fs.size(), beta);
  return solve_operators(fs, sys, bounds, sys.order() + beta);
}

std::vector<OperatorTuple> wspace_generators(std::span<const RatFun> fs) {
  std::vector<std::size_t> orders;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].is_zero()) throw IndexedError(ErrorCode::ZeroInput, i, "discrete residues of zero");
  }
  const SharedResidueSystem sys = detail::shared_residues(fs, &orders);
  const std::size_t m = sys.order();
  std::vector<unsigned> bounds;
  for (auto mi : orders) bounds.push_back(static_cast<unsigned>(m - mi));
  return solve_operators(fs, sys, bounds, m);
}

bool in_wspace(std::span<const RatFun> fs, const OperatorTuple& ops) {
  if (ops.ops.size() != fs.size()) return false;
  std::vector<std::size_t> orders;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].is_zero()) throw IndexedError(ErrorCode::ZeroInput, i, "discrete residues of zero");
  }
  const SharedResidueSystem sys = detail::shared_residues(fs, &orders);
  std::vector<unsigned> bounds;
  std::size_t tight = 0;
  RatVector lambda;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const int ord = ops.ops[i].order();
    bounds.push_back(ord < 0 ? 0u : static_cast<unsigned>(ord));
    if (ord >= 0) tight = std::max(tight, static_cast<std::size_t>(ord) + orders[i]);
    for (unsigned s = 0; s <= bounds.back(); ++s) lambda.push_back(ops.ops[i].coeff(s));
  }
  std::vector<std::size_t> offsets;
  std::size_t ncols = 0;
  const RatMatrix eqs = operator_equations(sys, bounds, tight, offsets, ncols);
  for (const auto& row : eqs) {
    Rat acc = 0;
    for (std::size_t c = 0; c < ncols; ++c) acc += row[c] * lambda[c];
    if (acc != 0) return false;
  }
  return true;
}

}  // namespace disres
