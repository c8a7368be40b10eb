#include "pmech/supercharge.hpp"

#include <bit>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace pmech {

namespace {
constexpr Complex kI{0.0, 1.0};
}

SuperchargePair build_supercharges_1d(Complex alpha, Complex beta, const VarTablePtr& table,
                                      const std::string& x, const std::string& p,
                                      const std::string& theta, const std::string& pi) {
  if (std::abs(std::norm(alpha) - std::norm(beta)) < 1e-12)
    throw std::domain_error("degenerate supercharge pair");
  SuperPolynomial X = SuperPolynomial::variable(table, x);
  SuperPolynomial P = SuperPolynomial::variable(table, p);
  SuperPolynomial Th = SuperPolynomial::variable(table, theta);
  SuperPolynomial Pi = SuperPolynomial::variable(table, pi);
  SuperchargePair pair{alpha * (P * Th) + beta * (X * Pi),
                       std::conj(beta) * (P * Th) + std::conj(alpha) * (X * Pi), alpha, beta};
  return pair;
}

NilpotencyDefects nilpotency_defects(const SuperchargePair& pair, const BracketContext& ctx) {
  NilpotencyDefects d{gpb(pair.Q, pair.Q, ctx), gpb(pair.Qbar, pair.Qbar, ctx), 0.0, 0.0};
  for (const auto& f : monomial_basis(ctx.table, 3)) {
    d.operator_defect_q =
        std::max(d.operator_defect_q, gpb(gpb(f, pair.Q, ctx), pair.Q, ctx).max_abs_coeff());
    d.operator_defect_qbar = std::max(
        d.operator_defect_qbar, gpb(gpb(f, pair.Qbar, ctx), pair.Qbar, ctx).max_abs_coeff());
  }
  return d;
}

std::vector<SusyTableRow> susy_transform_table(const SuperchargePair& pair,
                                               const BracketContext& ctx) {
  std::vector<SusyTableRow> rows;
  for (int i = 0; i < ctx.table->size(); ++i) {
    SuperPolynomial v = SuperPolynomial::variable(ctx.table, i);
    rows.push_back({ctx.table->name(i), gpb(v, pair.Q, ctx), gpb(v, pair.Qbar, ctx)});
  }
  return rows;
}

BosonFermionImage map_boson_fermion(const SuperPolynomial& e_bosonic,
                                    const SuperchargePair& pair, const BracketContext& ctx) {
  if (parity_of(e_bosonic) != ParityClass::Even)
    throw std::invalid_argument("map_boson_fermion requires an even input");
  BosonFermionImage img{gpb(gpb(e_bosonic, pair.Q, ctx), pair.Qbar, ctx),
                        SuperPolynomial::zero(ctx.table), SuperPolynomial::zero(ctx.table)};
  img.fermionic_part = img.full.odd_sector_part();
  img.bosonic_remainder = img.full.even_sector_part();
  return img;
}

Supercharges2d build_supercharges_2d(const VarTablePtr& table) {
  auto v = [&](const std::string& n) { return SuperPolynomial::variable(table, n); };
  SuperPolynomial p_plus = v("P1") + v("P2"), p_minus = v("P1") - v("P2");
  SuperPolynomial x_plus = v("X1") + v("X2"), x_minus = v("X1") - v("X2");
  SuperPolynomial th_plus = v("theta1") + v("theta2"), th_minus = v("theta1") - v("theta2");
  SuperPolynomial pi_plus = v("pi1") + v("pi2"), pi_minus = v("pi1") - v("pi2");
  return {p_plus * th_plus, pi_plus * x_plus, p_minus * th_minus, pi_minus * x_minus};
}

Algebra2d supercharge_algebra_2d(const Supercharges2d& charges, const BracketContext& ctx) {
  Algebra2d a{gpb(charges.Q1, charges.Qbar1, ctx), gpb(charges.Q1, charges.Qbar2, ctx),
              gpb(charges.Q2, charges.Qbar1, ctx), gpb(charges.Q2, charges.Qbar2, ctx),
              SuperPolynomial::zero(ctx.table), SuperPolynomial::zero(ctx.table), 0.0};
  // M = 2(sigma0 h0 + sigma3 h1) has zero off-diagonal
  a.h0 = 0.25 * (a.m11 + a.m22);
  a.h1 = 0.25 * (a.m11 - a.m22);
  a.residual = std::max(a.m12.max_abs_coeff(), a.m21.max_abs_coeff());
  if (a.residual > ctx.tolerance)
    throw std::domain_error("supercharge algebra does not close in the sigma0/sigma3 basis");
  return a;
}

RSymmetryReport r_symmetry_check(const Supercharges2d& charges, double phi, double psi,
                                 const BracketContext& ctx) {
  const Complex e1 = std::exp(kI * phi), e2 = std::exp(kI * psi);
  Supercharges2d rotated{e1 * charges.Q1, std::conj(e1) * charges.Qbar1, e2 * charges.Q2,
                         std::conj(e2) * charges.Qbar2};
  RSymmetryReport rep;
  rep.max_qq_defect = std::max({gpb(rotated.Q1, rotated.Q1, ctx).max_abs_coeff(),
                                gpb(rotated.Q1, rotated.Q2, ctx).max_abs_coeff(),
                                gpb(rotated.Q2, rotated.Q2, ctx).max_abs_coeff(),
                                gpb(rotated.Qbar1, rotated.Qbar1, ctx).max_abs_coeff(),
                                gpb(rotated.Qbar1, rotated.Qbar2, ctx).max_abs_coeff(),
                                gpb(rotated.Qbar2, rotated.Qbar2, ctx).max_abs_coeff()});
  Algebra2d before = supercharge_algebra_2d(charges, ctx);
  Algebra2d after = supercharge_algebra_2d(rotated, ctx);
  rep.residual = after.residual;
  rep.max_h_defect = std::max((after.h0 - before.h0).max_abs_coeff(),
                              (after.h1 - before.h1).max_abs_coeff());
  rep.ok = rep.max_qq_defect <= ctx.tolerance && rep.max_h_defect <= ctx.tolerance &&
           rep.residual <= ctx.tolerance;
  return rep;
}

std::vector<SusyTableRow> susy_transform_table_2d(const SuperPolynomial& q,
                                                  const SuperPolynomial& qbar,
                                                  const BracketContext& ctx) {
  std::vector<SusyTableRow> rows;
  for (int i = 0; i < ctx.table->size(); ++i) {
    SuperPolynomial v = SuperPolynomial::variable(ctx.table, i);
    rows.push_back({ctx.table->name(i), gpb(v, q, ctx), gpb(v, qbar, ctx)});
  }
  return rows;
}

}  // namespace pmech
