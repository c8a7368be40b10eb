#include "pmech/nambu.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pmech {

namespace {

// derivative with the bracket's flavor convention
SuperPolynomial flavored_derivative(const SuperPolynomial& f, int var, const VarTablePtr& table) {
  return table->info(var).role == VarRole::Momentum ? f.derivative_left(var)
                                                    : f.derivative_right(var);
}

SuperPolynomial uniform_determinant(const std::array<SuperPolynomial, 4>& rows,
                                    const std::array<int, 4>& vars, DetOrder order,
                                    const VarTablePtr& table) {
  std::vector<std::vector<SuperPolynomial>> d;
  d.reserve(4);
  for (int r = 0; r < 4; ++r) {
    std::vector<SuperPolynomial> row;
    for (int c = 0; c < 4; ++c) row.push_back(flavored_derivative(rows[r], vars[c], table));
    d.push_back(std::move(row));
  }
  SuperPolynomial det = SuperPolynomial::zero(table);
  std::array<int, 4> perm{0, 1, 2, 3};  // perm[r] = column of row r
  do {
    int inversions = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        if (perm[a] > perm[b]) ++inversions;
    const double sign = (inversions & 1) ? -1.0 : 1.0;
    SuperPolynomial prod = SuperPolynomial::constant(table, sign);
    if (order == DetOrder::RowMajor) {
      for (int r = 0; r < 4; ++r) prod = prod * d[r][perm[r]];
    } else {
      std::array<int, 4> row_of_col{};
      for (int r = 0; r < 4; ++r) row_of_col[perm[r]] = r;
      for (int c = 0; c < 4; ++c) prod = prod * d[row_of_col[c]][c];
    }
    det += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// single-pair piece of the generalized bracket for homogeneous inputs
SuperPolynomial pair_block(const SuperPolynomial& f, int df, const SuperPolynomial& g, int dg,
                           int coord, int mom) {
  const double sign = (df & dg) ? -1.0 : 1.0;
  return f.derivative_right(coord) * g.derivative_left(mom) -
         sign * (g.derivative_right(coord) * f.derivative_left(mom));
}

// expansion by complementary pair blocks for parity-homogeneous rows
SuperPolynomial pair_graded_determinant(const std::array<SuperPolynomial, 4>& rows,
                                        const std::array<int, 4>& vars,
                                        const VarTablePtr& table) {
  int parity[4];
  for (int r = 0; r < 4; ++r) {
    ParityClass p = parity_of(rows[r]);
    if (p == ParityClass::Mixed)
      throw std::invalid_argument("pair-graded determinant requires homogeneous rows");
    parity[r] = p == ParityClass::Odd;
  }
  const int mom1 = vars[0], coord1 = vars[1], mom2 = vars[2], coord2 = vars[3];

  // rows (a,b) feed the first pair's block, (c,d) the second pair's; the
  // crossing sign matches the bracket's grading: odd-odd crossings commute
  struct Pairing {
    int a, b, c, d;
  };
  static const Pairing pairings[6] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2},
                                      {2, 3, 0, 1}, {1, 3, 0, 2}, {1, 2, 0, 3}};
  SuperPolynomial acc = SuperPolynomial::zero(table);
  for (const Pairing& pr : pairings) {
    const int order[4] = {pr.a, pr.b, pr.c, pr.d};
    double sign = 1.0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (order[i] > order[j])
          sign *= (parity[order[i]] & parity[order[j]]) ? 1.0 : -1.0;
    SuperPolynomial first = pair_block(rows[pr.a], parity[pr.a], rows[pr.b], parity[pr.b],
                                       coord1, mom1);
    SuperPolynomial second = pair_block(rows[pr.c], parity[pr.c], rows[pr.d], parity[pr.d],
                                        coord2, mom2);
    acc += sign * (second * first);
  }
  return acc;
}

SuperPolynomial graded_determinant(const std::array<SuperPolynomial, 4>& rows,
                                   const std::array<int, 4>& vars, DetOrder order,
                                   const VarTablePtr& table) {
  if (order != DetOrder::PairGraded) return uniform_determinant(rows, vars, order, table);
  // multilinear in every row: split mixed rows by parity
  for (int r = 0; r < 4; ++r) {
    if (parity_of(rows[r]) != ParityClass::Mixed) continue;
    std::array<SuperPolynomial, 4> even = rows, odd = rows;
    even[r] = rows[r].even_part();
    odd[r] = rows[r].odd_part();
    return graded_determinant(even, vars, order, table) +
           graded_determinant(odd, vars, order, table);
  }
  return pair_graded_determinant(rows, vars, table);
}

}  // namespace

SuperPolynomial graded_jacobian(const SuperPolynomial& f, const NambuSpec& spec,
                                const BracketContext& ctx) {
  return graded_determinant({f, spec.hamiltonians[0], spec.hamiltonians[1], spec.hamiltonians[2]},
                            spec.variable_order, spec.order, ctx.table);
}

SuperPolynomial nambu_defect(const SuperPolynomial& f, const SuperPolynomial& h,
                             const NambuSpec& spec, const BracketContext& ctx) {
  return spec.normalization * graded_jacobian(f, spec, ctx) -
         spec.divisor * gpb(f, h, ctx);
}

NambuSpec make_nambu_spec(const std::array<SuperPolynomial, 3>& hamiltonians,
                          const SuperPolynomial& divisor, const SuperPolynomial& h,
                          const std::array<int, 4>& variable_order, const BracketContext& ctx) {
  for (const auto& row : hamiltonians)
    if (parity_of(row) == ParityClass::Mixed)
      throw std::invalid_argument("Nambu-Hamiltonians must be parity-homogeneous");
  NambuSpec spec{hamiltonians, divisor, Complex{0.0, 0.0}, DetOrder::RowMajor, variable_order};
  const SuperPolynomial p = SuperPolynomial::variable(ctx.table, variable_order[0]);
  const auto basis = monomial_basis(ctx.table, 2);

  for (DetOrder order : {DetOrder::RowMajor, DetOrder::ColumnMajor, DetOrder::PairGraded}) {
    spec.order = order;
    SuperPolynomial jp = graded_jacobian(p, spec, ctx);
    if (jp.is_zero(ctx.tolerance)) continue;
    auto norm = match_up_to_scalar(spec.divisor * gpb(p, h, ctx), jp, ctx.tolerance);
    if (!norm || std::abs(*norm) < ctx.tolerance) continue;
    spec.normalization = *norm;
    double worst = 0.0;
    for (const auto& f : basis)
      worst = std::max(worst, nambu_defect(f, h, spec, ctx).max_abs_coeff());
    if (worst <= ctx.tolerance) return spec;
  }
  throw std::domain_error(
      "no product convention reproduces the equations of motion for this Hamiltonian triple");
}

QuotientResult exact_quotient(const SuperPolynomial& j, const SuperPolynomial& d) {
  if (d.is_zero()) throw std::invalid_argument("exact_quotient: zero divisor");
  QuotientResult result;
  const VarTablePtr table = j.table();

  int min_d_degree = d.degree();
  for (const auto& [m, c] : d.terms()) {
    (void)c;
    min_d_degree = std::min(min_d_degree, m.total_degree());
  }
  const int max_degree = std::max(0, j.degree() - min_d_degree);

  std::vector<SuperPolynomial> candidates;
  std::vector<SuperPolynomial> products;
  for (auto& m : monomial_basis(table, max_degree)) {
    SuperPolynomial prod = d * m;
    if (prod.is_zero()) continue;  // annihilated: pure kernel direction
    candidates.push_back(std::move(m));
    products.push_back(std::move(prod));
  }
  if (candidates.empty()) {
    result.residual = j.max_abs_coeff();
    return result;
  }

  SpanSolve sol = solve_in_span(products, j);
  result.residual = sol.residual;
  if (sol.residual > 1e-10 * std::max(1.0, j.max_abs_coeff())) {
    result.status = QuotientResult::Status::Failure;
    return result;
  }
  SuperPolynomial r = SuperPolynomial::zero(table);
  for (size_t k = 0; k < candidates.size(); ++k)
    r += sol.coeffs(static_cast<Eigen::Index>(k)) * candidates[k];
  result.quotient = std::move(r);
  result.status = sol.rank_deficient ? QuotientResult::Status::Ambiguous
                                     : QuotientResult::Status::Success;
  return result;
}

SuperPolynomial nambu_bracket_of_hamiltonians(const std::array<SuperPolynomial, 4>& rows,
                                              const NambuSpec& spec, const BracketContext& ctx) {
  return graded_determinant(rows, spec.variable_order, spec.order, ctx.table);
}

std::string to_string(DetOrder order) {
  switch (order) {
    case DetOrder::RowMajor: return "row_major";
    case DetOrder::ColumnMajor: return "column_major";
    case DetOrder::PairGraded: return "pair_graded";
  }
  return "pair_graded";
}

}  // namespace pmech
