#include "pmech/symmetry.hpp"

#include <stdexcept>

namespace pmech {

namespace {

constexpr Complex kI{0.0, 1.0};

Eigen::MatrixXcd eta_matrix(int n) {
  Eigen::MatrixXcd eta = Eigen::MatrixXcd::Identity(2 * n, 2 * n);
  for (int k = n; k < 2 * n; ++k) eta(k, k) = -1.0;
  return eta;
}

}  // namespace

double pseudo_unitary_defect(const GeneratorMatrix& g) {
  const int n = static_cast<int>(g.m.rows()) / 2;
  const Eigen::MatrixXcd eta = eta_matrix(n);
  return (eta * g.m.adjoint() * eta - g.m).cwiseAbs().maxCoeff();
}

std::array<GeneratorMatrix, 4> u11_generators() {
  Eigen::Matrix2cd s0 = Eigen::Matrix2cd::Identity();
  Eigen::Matrix2cd s1, s2, s3;
  s1 << 0, 1, 1, 0;
  s2 << 0, Complex{0, -1}, Complex{0, 1}, 0;
  s3 << 1, 0, 0, -1;
  return {GeneratorMatrix{0.5 * s0, GeneratorMatrix::Block::Diagonal},
          GeneratorMatrix{0.5 * kI * s1, GeneratorMatrix::Block::OffDiagonal},
          GeneratorMatrix{0.5 * kI * s2, GeneratorMatrix::Block::OffDiagonal},
          GeneratorMatrix{0.5 * s3, GeneratorMatrix::Block::Diagonal}};
}

std::vector<GeneratorMatrix> unn_generators(int n) {
  if (n < 1) throw std::invalid_argument("unn_generators requires n >= 1");
  const int d = 2 * n;
  std::vector<GeneratorMatrix> gens;
  gens.reserve(4 * n * n);
  // Hermitian basis of each diagonal block
  for (int block = 0; block < 2; ++block) {
    const int off = block * n;
    for (int j = 0; j < n; ++j) {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
      m(off + j, off + j) = 1.0;
      gens.push_back({m, GeneratorMatrix::Block::Diagonal});
    }
    for (int j = 0; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        Eigen::MatrixXcd sym = Eigen::MatrixXcd::Zero(d, d);
        sym(off + j, off + k) = 1.0;
        sym(off + k, off + j) = 1.0;
        gens.push_back({sym, GeneratorMatrix::Block::Diagonal});
        Eigen::MatrixXcd asym = Eigen::MatrixXcd::Zero(d, d);
        asym(off + j, off + k) = kI;
        asym(off + k, off + j) = -kI;
        gens.push_back({asym, GeneratorMatrix::Block::Diagonal});
      }
    }
  }
  // i times the Hermitian off-diagonal forms
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      Eigen::MatrixXcd m1 = Eigen::MatrixXcd::Zero(d, d);
      m1(j, n + k) = kI;
      m1(n + k, j) = kI;
      gens.push_back({m1, GeneratorMatrix::Block::OffDiagonal});
      Eigen::MatrixXcd m2 = Eigen::MatrixXcd::Zero(d, d);
      m2(j, n + k) = -1.0;
      m2(n + k, j) = 1.0;
      gens.push_back({m2, GeneratorMatrix::Block::OffDiagonal});
    }
  }
  return gens;
}

SuperPolynomial first_integral(const GeneratorMatrix& t, const PhaseVectors& pv) {
  const int d = static_cast<int>(pv.momenta.size());
  if (t.m.rows() != d || t.m.cols() != d || pv.coordinates.size() != pv.momenta.size())
    throw std::invalid_argument("generator/phase-vector dimension mismatch");
  SuperPolynomial acc = SuperPolynomial::zero(pv.momenta.front().table());
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      if (std::abs(t.m(j, k)) < SuperPolynomial::kPruneThreshold) continue;
      acc += t.m(j, k) * (pv.momenta[j] * pv.coordinates[k]);
    }
  return acc;
}

SuperPolynomial invariance_defect(const GeneratorMatrix& t, const PhaseVectors& pv,
                                  const SuperPolynomial& h, const BracketContext& ctx) {
  const int d = static_cast<int>(pv.momenta.size());
  if (t.m.rows() != d || t.m.cols() != d)
    throw std::invalid_argument("generator/phase-vector dimension mismatch");
  const int n = d / 2;

  // coefficients of H in the quadratic momentum-coordinate basis
  std::vector<SuperPolynomial> basis;
  basis.reserve(d * d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) basis.push_back(pv.momenta[j] * pv.coordinates[k]);
  SpanSolve sol = solve_in_span(basis, h);
  if (sol.residual > ctx.tolerance)
    throw std::invalid_argument("Hamiltonian is not of quadratic momentum-coordinate form");

  const Eigen::MatrixXcd eta = eta_matrix(n);
  const Eigen::MatrixXcd tp = -kI * (eta * t.m.conjugate() * eta);  // momentum action
  const Eigen::MatrixXcd tq = kI * t.m;                             // coordinate action

  auto combo = [&](const std::vector<SuperPolynomial>& vec, const Eigen::MatrixXcd& act, int row) {
    SuperPolynomial out = SuperPolynomial::zero(ctx.table);
    for (int l = 0; l < d; ++l) {
      if (std::abs(act(row, l)) < SuperPolynomial::kPruneThreshold) continue;
      out += act(row, l) * vec[l];
    }
    return out;
  };

  SuperPolynomial defect = SuperPolynomial::zero(ctx.table);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      const Complex c = sol.coeffs(j * d + k);
      if (std::abs(c) < SuperPolynomial::kPruneThreshold) continue;
      defect += c * (combo(pv.momenta, tp, j) * pv.coordinates[k]);
      defect += c * (pv.momenta[j] * combo(pv.coordinates, tq, k));
    }
  return defect;
}

ClosureReport closure_check(const std::vector<SuperPolynomial>& pair_list,
                            const std::vector<SuperPolynomial>& span_list,
                            const BracketContext& ctx) {
  ClosureReport report;
  for (size_t i = 0; i < pair_list.size(); ++i) {
    for (size_t j = i; j < pair_list.size(); ++j) {
      SuperPolynomial br = gpb(pair_list[i], pair_list[j], ctx);
      SpanSolve sol = solve_in_span(span_list, br);
      ClosureEntry e;
      e.i = static_cast<int>(i);
      e.j = static_cast<int>(j);
      e.residual = sol.residual;
      for (Eigen::Index k = 0; k < sol.coeffs.size(); ++k) e.coefficients.push_back(sol.coeffs(k));
      report.max_residual = std::max(report.max_residual, e.residual);
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

ClosureReport closure_check(const std::vector<SuperPolynomial>& integrals,
                            const BracketContext& ctx) {
  return closure_check(integrals, integrals, ctx);
}

}  // namespace pmech
