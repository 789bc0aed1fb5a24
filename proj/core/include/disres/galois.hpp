#pragma once

#include <disres/lattice.hpp>
#include <disres/linalg.hpp>
#include <disres/ratfun.hpp>

#include <span>
#include <vector>

namespace disres {

/// sigma(Y) = diag(r_1, ..., r_n) Y with every r_i nonzero.
struct DiagonalSystem {
  std::vector<RatFun> rs;
};

/// prod_i r_i^{e_i} = eps * sigma(p)/p for the matching lattice basis vector e.
struct RelationWitness {
  RatFun p;
  Rat eps;
};

struct MultRelationData {
  IntLattice lattice;
  std::vector<RelationWitness> witnesses;
};

/// r'/r. Throws ZeroInput.
RatFun log_derivative(const RatFun& r);

/// {v in Z^n : sum v_i f_i is summable} in Hermite normal form.
IntLattice integer_lattice(std::span<const RatFun> fs);

/// p with p'/p = g for a proper g with simple poles and integer residues.
/// Throws NotProper, NotSquarefree or NonIntegerResidues.
RatFun exp_log_integrate(const RatFun& g);

/// Integer vectors e with prod r_i^{e_i} = eps * sigma(p)/p, with witnesses.
MultRelationData diagonal_relations(const DiagonalSystem& sys);

/// {m in Z^s : prod eps_j^{m_j} = 1}. Factors by trial division up to
/// `trial_bound`; throws FactorizationBound past it and ZeroEpsilon on zero.
IntLattice multiplicative_relations(std::span<const Rat> eps, unsigned long trial_bound = 1000000);

/// {sum_j m_j e_j : m in relations}, in the coordinates of the lattice vectors e_j.
IntLattice compose_relations(const IntLattice& lattice, const IntLattice& relations);

}  // namespace disres
