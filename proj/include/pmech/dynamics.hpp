#ifndef PMECH_DYNAMICS_HPP
#define PMECH_DYNAMICS_HPP

#include <vector>

#include <Eigen/Dense>

#include "pmech/bracket.hpp"
#include "pmech/linmap.hpp"

namespace pmech {

/// Exact linear dynamics d/dt v = L v on the ordered variable vector, read
/// off column-by-column from the bracket with a quadratic Hamiltonian.
struct EvolutionMatrix {
  Eigen::MatrixXcd L;
  VarTablePtr table;
};

/// Throws "not a quadratic Hamiltonian" when any variable's time derivative
/// fails to be linear in the variables.
EvolutionMatrix linearize(const SuperPolynomial& h, const BracketContext& ctx);

/// exp(A) via eigendecomposition with a scaling-and-squaring fallback.
Eigen::MatrixXcd matrix_exp(const Eigen::MatrixXcd& a);

/// The flow at time t as a substitution map v_i -> sum_j exp(Lt)_{ij} v_j.
LinearCanonicalMap evolve_map(const EvolutionMatrix& ev, double t);

/// Applies the flow to an assignment of initial data. Odd components stay
/// symbolic: they are linear combinations of the odd generators.
LinearCanonicalMap evolve(const LinearCanonicalMap& v0, const EvolutionMatrix& ev, double t);

/// Max coefficient of substitute(I, exp(Lt)) - I over the time grid.
double conservation_over_time(const SuperPolynomial& integral, const EvolutionMatrix& ev,
                              const std::vector<double>& t_grid);

}  // namespace pmech

#endif
