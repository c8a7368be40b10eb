#include "pmech/span.hpp"

#include <map>
#include <stdexcept>

namespace pmech {

SpanSolve solve_in_span(const std::vector<SuperPolynomial>& basis,
                        const SuperPolynomial& target) {
  if (basis.empty()) {
    SpanSolve s;
    s.residual = target.max_abs_coeff();
    return s;
  }
  std::map<Monomial, Eigen::Index> rows;
  auto index_terms = [&rows](const SuperPolynomial& p) {
    for (const auto& [m, c] : p.terms()) {
      (void)c;
      rows.emplace(m, 0);
    }
  };
  for (const auto& b : basis) index_terms(b);
  index_terms(target);
  Eigen::Index r = 0;
  for (auto& [m, idx] : rows) {
    (void)m;
    idx = r++;
  }

  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(r, static_cast<Eigen::Index>(basis.size()));
  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(r);
  for (size_t k = 0; k < basis.size(); ++k)
    for (const auto& [m, c] : basis[k].terms())
      A(rows.at(m), static_cast<Eigen::Index>(k)) = c;
  for (const auto& [m, c] : target.terms()) b(rows.at(m)) = c;

  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(A);
  SpanSolve s;
  s.coeffs = cod.solve(b);
  s.rank = cod.rank();
  s.rank_deficient = s.rank < A.cols();
  s.residual = r == 0 ? 0.0 : (A * s.coeffs - b).cwiseAbs().maxCoeff();
  return s;
}

std::optional<Complex> match_up_to_scalar(const SuperPolynomial& f,
                                          const SuperPolynomial& g,
                                          double tol) {
  if (g.is_zero()) throw std::invalid_argument("match_up_to_scalar: zero reference");
  if (f.is_zero()) {
    // f = 0 matches only the zero scalar
    return Complex{0.0, 0.0};
  }
  // pivot on the largest reference coefficient
  const Monomial* pivot = nullptr;
  double best = -1.0;
  for (const auto& [m, c] : g.terms()) {
    if (std::abs(c) > best) {
      best = std::abs(c);
      pivot = &m;
    }
  }
  Complex c = f.coeff(*pivot) / g.coeff(*pivot);
  SuperPolynomial defect = f - g * c;
  if (defect.max_abs_coeff() > tol * std::max(1.0, f.max_abs_coeff())) return std::nullopt;
  return c;
}

}  // namespace pmech
