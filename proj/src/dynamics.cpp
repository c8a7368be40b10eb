#include "pmech/dynamics.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace pmech {

EvolutionMatrix linearize(const SuperPolynomial& h, const BracketContext& ctx) {
  const int n = ctx.table->size();
  Eigen::MatrixXcd L = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    SuperPolynomial vdot = time_derivative(SuperPolynomial::variable(ctx.table, i), h, ctx);
    for (const auto& [m, c] : vdot.terms()) {
      if (m.total_degree() != 1) throw std::invalid_argument("not a quadratic Hamiltonian");
      int j;
      if (m.odd_mask != 0) {
        j = ctx.table->odd_var(std::countr_zero(m.odd_mask));
      } else {
        j = -1;
        for (size_t slot = 0; slot < m.even_exp.size(); ++slot)
          if (m.even_exp[slot] == 1) j = ctx.table->even_var(static_cast<int>(slot));
      }
      L(i, j) = c;
    }
  }
  return {L, ctx.table};
}

Eigen::MatrixXcd matrix_exp(const Eigen::MatrixXcd& a) {
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(a);
  if (es.info() == Eigen::Success) {
    const Eigen::MatrixXcd& v = es.eigenvectors();
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(v);
    if (lu.isInvertible()) {
      Eigen::MatrixXcd vinv = lu.inverse();
      Eigen::MatrixXcd rebuilt = v * es.eigenvalues().asDiagonal() * vinv;
      if ((rebuilt - a).cwiseAbs().maxCoeff() < 1e-12 * scale)
        return v * es.eigenvalues().array().exp().matrix().asDiagonal() * vinv;
    }
  }
  // scaling and squaring with a truncated series
  int squarings = 0;
  Eigen::MatrixXcd b = a;
  while (b.cwiseAbs().maxCoeff() > 0.5) {
    b *= 0.5;
    ++squarings;
  }
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(a.rows(), a.cols());
  Eigen::MatrixXcd term = result;
  for (int k = 1; k <= 24; ++k) {
    term = term * b / static_cast<double>(k);
    result += term;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

LinearCanonicalMap evolve_map(const EvolutionMatrix& ev, double t) {
  Eigen::MatrixXcd flow = matrix_exp(ev.L * t);
  // scrub roundoff that would mix parities
  for (Eigen::Index i = 0; i < flow.rows(); ++i)
    for (Eigen::Index j = 0; j < flow.cols(); ++j)
      if (std::abs(flow(i, j)) < SuperPolynomial::kPruneThreshold) flow(i, j) = 0.0;
  return LinearCanonicalMap::from_matrix(ev.table, flow);
}

LinearCanonicalMap evolve(const LinearCanonicalMap& v0, const EvolutionMatrix& ev, double t) {
  if (v0.source()->size() != ev.table->size())
    throw std::invalid_argument("initial assignment dimension mismatch");
  Eigen::MatrixXcd m = matrix_exp(ev.L * t) * v0.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (std::abs(m(i, j)) < SuperPolynomial::kPruneThreshold) m(i, j) = 0.0;
  return LinearCanonicalMap::from_matrix(ev.table, m);
}

double conservation_over_time(const SuperPolynomial& integral, const EvolutionMatrix& ev,
                              const std::vector<double>& t_grid) {
  double worst = 0.0;
  for (double t : t_grid) {
    SuperPolynomial evolved = substitute(integral, evolve_map(ev, t));
    worst = std::max(worst, (evolved - integral).max_abs_coeff());
  }
  return worst;
}

}  // namespace pmech
