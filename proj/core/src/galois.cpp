#include <disres/galois.hpp>
#include <disres/residues.hpp>
#include <disres/telescope.hpp>

#include <map>

namespace disres {

RatFun log_derivative(const RatFun& r) {
  if (r.is_zero()) throw Error(ErrorCode::ZeroInput, "logarithmic derivative of zero");
  return d_dx(r) / r;
}

namespace {

IntLattice lattice_of(std::span<const RatFun> fs, const SharedResidueSystem& sys) {
  const std::size_t n = fs.size();
  std::vector<IntVector> rows;
  for (std::size_t k = 0; k < sys.order(); ++k) {
    for (int t = 0; t < sys.B.degree(); ++t) {
      std::vector<Rat> row(n);
      Int den = 1;
      bool nonzero = false;
      for (std::size_t i = 0; i < n; ++i) {
        row[i] = sys.D[i][k].coeff(t);
        if (row[i] != 0) {
          nonzero = true;
          mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), row[i].get_den_mpz_t());
        }
      }
      if (!nonzero) continue;
      IntVector irow(n);
      for (std::size_t i = 0; i < n; ++i) irow[i] = Rat(row[i] * den).get_num();
      rows.push_back(std::move(irow));
    }
  }
  return integer_kernel(rows, n);
}

struct Factorization {
  int sign = 1;
  std::map<Int, long> exponents;
};

void factor_into(Int n, long mult, unsigned long bound, std::map<Int, long>& out) {
  for (unsigned long d = 2; d <= bound; d += (d == 2 ? 1 : 2)) {
    if (Int(d) * d > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), d) != 0) {
      out[Int(d)] += mult;
      n /= d;
    }
  }
  if (n == 1) return;
  const Int next(bound + 1);
  if (n >= next * next) throw Error(ErrorCode::FactorizationBound, "cofactor " + n.get_str() + " exceeds the trial-division bound");
  out[n] += mult;
}

Factorization factor(const Rat& q, unsigned long bound) {
  Factorization f;
  f.sign = sgn(q) < 0 ? -1 : 1;
  factor_into(abs(q.get_num()), 1, bound, f.exponents);
  factor_into(q.get_den(), -1, bound, f.exponents);
  return f;
}

}  // namespace

IntLattice integer_lattice(std::span<const RatFun> fs) {
  const SharedResidueSystem sys = discrete_residues_plus(fs);
  return lattice_of(fs, sys);
}

RatFun exp_log_integrate(const RatFun& g) {
  if (!g.is_proper()) throw Error(ErrorCode::NotProper, "logarithmic integration needs a proper rational function");
  if (!is_squarefree(g.den())) throw Error(ErrorCode::NotSquarefree, "logarithmic integration needs simple poles");
  if (g.is_zero()) return RatFun::constant(1);
  const Poly& a = g.num();
  const Poly& b = g.den();
  const Poly db = derivative(b);
  Poly num = Poly::constant(1);
  Poly den = Poly::constant(1);
  for (const Int& c : integer_roots(residue_resultant(a, b))) {
    if (c == 0) continue;
    const Poly h = gcd_monic(b, a - Rat(c) * db);
    if (h.degree() < 1) continue;
    const auto e = static_cast<unsigned>(Int(abs(c)).get_ui());
    (c > 0 ? num : den) *= pow(h, e);
  }
  RatFun p(num, den);
  if (log_derivative(p) != g) throw Error(ErrorCode::NonIntegerResidues, "residues are not all integers");
  return p;
}

MultRelationData diagonal_relations(const DiagonalSystem& sys) {
  std::vector<RatFun> fs;
  fs.reserve(sys.rs.size());
  for (std::size_t i = 0; i < sys.rs.size(); ++i) {
    try {
      fs.push_back(log_derivative(sys.rs[i]));
    } catch (const Error& e) {
      throw IndexedError(e.code(), i, e.what());
    }
  }
  MultRelationData out;
  // Constant r_i give f_i = 0, which contributes no residue conditions.
  out.lattice = lattice_of(fs, detail::shared_residues(fs));
  for (const auto& e : out.lattice.basis) {
    RatFun h;
    RatFun prod = RatFun::constant(1);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (e[i] == 0) continue;
      h += Rat(e[i]) * fs[i];
      prod *= sys.rs[i].pow(e[i].get_si());
    }
    const SummabilityVerdict v = is_summable(h);
    if (!v.summable) throw Error(ErrorCode::InternalConsistency, "lattice vector does not give a summable combination");
    RatFun p;
    try {
      p = exp_log_integrate(*v.certificate);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::NonIntegerResidues) throw;
      throw Error(ErrorCode::InternalConsistency, std::string("certificate is not a logarithmic derivative: ") + err.what());
    }
    const RatFun eps = prod * p / sigma_pow(p, 1);
    if (!eps.is_constant() || eps.is_zero()) {
      throw Error(ErrorCode::NonConstantEpsilon, "relation constant is not a nonzero constant: " + eps.to_string());
    }
    out.witnesses.push_back({std::move(p), eps.num().coeff(0)});
  }
  return out;
}

IntLattice multiplicative_relations(std::span<const Rat> eps, unsigned long trial_bound) {
  const std::size_t s = eps.size();
  std::vector<Factorization> fs;
  fs.reserve(s);
  for (std::size_t j = 0; j < s; ++j) {
    if (eps[j] == 0) throw IndexedError(ErrorCode::ZeroEpsilon, j, "relation constant is zero");
    fs.push_back(factor(eps[j], trial_bound));
  }
  std::map<Int, IntVector> rows;
  for (std::size_t j = 0; j < s; ++j) {
    for (const auto& [p, a] : fs[j].exponents) {
      auto& row = rows.try_emplace(p, IntVector(s)).first->second;
      row[j] = a;
    }
  }
  std::vector<IntVector> A;
  for (auto& [p, row] : rows) A.push_back(std::move(row));
  IntLattice kernel = integer_kernel(A, s);

  // Keep the vectors with an even total exponent on the negative constants.
  auto parity = [&](const IntVector& v) {
    Int sum = 0;
    for (std::size_t j = 0; j < s; ++j) {
      if (fs[j].sign < 0) sum += v[j];
    }
    return mpz_odd_p(sum.get_mpz_t()) != 0;
  };
  std::vector<IntVector> basis = kernel.basis;
  std::size_t odd = basis.size();
  for (std::size_t t = 0; t < basis.size(); ++t) {
    if (parity(basis[t])) {
      odd = t;
      break;
    }
  }
  if (odd == basis.size()) return kernel;
  const IntVector anchor = basis[odd];
  for (std::size_t t = 0; t < basis.size(); ++t) {
    if (t == odd) {
      for (auto& e : basis[t]) e *= 2;
    } else if (parity(basis[t])) {
      for (std::size_t j = 0; j < s; ++j) basis[t][j] -= anchor[j];
    }
  }
  return hnf(std::move(basis), s);
}

IntLattice compose_relations(const IntLattice& lattice, const IntLattice& relations) {
  std::vector<IntVector> rows;
  for (const auto& m : relations.basis) {
    IntVector v(lattice.dim);
    for (std::size_t j = 0; j < m.size() && j < lattice.basis.size(); ++j) {
      for (std::size_t i = 0; i < lattice.dim; ++i) v[i] += m[j] * lattice.basis[j][i];
    }
    rows.push_back(std::move(v));
  }
  return hnf(std::move(rows), lattice.dim);
}

}  // namespace disres
