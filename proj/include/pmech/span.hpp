#ifndef PMECH_SPAN_HPP
#define PMECH_SPAN_HPP

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "pmech/superpoly.hpp"

namespace pmech {

/// Least-squares expression of a target polynomial in the linear span of a
/// basis list, over the union of their monomials.
struct SpanSolve {
  Eigen::VectorXcd coeffs;
  double residual = 0.0;  // max abs coefficient of target - sum c_k basis_k
  Eigen::Index rank = 0;
  bool rank_deficient = false;
};

SpanSolve solve_in_span(const std::vector<SuperPolynomial>& basis,
                        const SuperPolynomial& target);

/// Returns c with f = c*g coefficient-wise within tol, or nothing.
std::optional<Complex> match_up_to_scalar(const SuperPolynomial& f,
                                          const SuperPolynomial& g,
                                          double tol = 1e-12);

}  // namespace pmech

#endif
