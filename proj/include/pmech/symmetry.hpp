#ifndef PMECH_SYMMETRY_HPP
#define PMECH_SYMMETRY_HPP

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "pmech/bracket.hpp"
#include "pmech/span.hpp"

namespace pmech {

/// A u(n,n) generator: complex 2n x 2n matrix satisfying eta M^dag eta = M
/// with eta = diag(I_n, -I_n). Block-diagonal generators are Hermitian and
/// produce even invariants; off-diagonal ones are i times a Hermitian
/// off-diagonal form and produce odd invariants.
struct GeneratorMatrix {
  enum class Block { Diagonal, OffDiagonal };
  Eigen::MatrixXcd m;
  Block tag;
};

/// Defect of the pseudo-unitarity condition eta M^dag eta - M.
double pseudo_unitary_defect(const GeneratorMatrix& g);

/// The four generators for n = 1: sigma0/2, (i/2)sigma1, (i/2)sigma2, sigma3/2.
std::array<GeneratorMatrix, 4> u11_generators();

/// Basis of u(n,n): 2n^2 block-diagonal (Hermitian basis of u(n)+u(n)) plus
/// 2n^2 off-diagonal generators, 4n^2 in total.
std::vector<GeneratorMatrix> unn_generators(int n);

/// Ordered momentum and coordinate polynomials (bosonic entries first, then
/// fermionic); the model Hamiltonian is i * sum_j momenta[j]*coordinates[j].
struct PhaseVectors {
  std::vector<SuperPolynomial> momenta;
  std::vector<SuperPolynomial> coordinates;
};

/// sum_{jk} T_{jk} momenta[j] * coordinates[k], momentum factor first.
SuperPolynomial first_integral(const GeneratorMatrix& t, const PhaseVectors& pv);

/// First-order variation of H under the infinitesimal generator action
/// (coordinates by i T, momenta by -i eta T* eta), with the group parameter
/// stripped. H must decompose in the momentum-times-coordinate quadratic
/// basis. Vanishes exactly when eta T^dag eta = T and H = i P^T Q.
SuperPolynomial invariance_defect(const GeneratorMatrix& t, const PhaseVectors& pv,
                                  const SuperPolynomial& h, const BracketContext& ctx);

struct ClosureEntry {
  int i = 0, j = 0;
  std::vector<Complex> coefficients;
  double residual = 0.0;
};

struct ClosureReport {
  std::vector<ClosureEntry> entries;
  double max_residual = 0.0;
};

/// Expresses the bracket of every pair from `pair_list` in the linear span of
/// `span_list` by least squares; residuals are reported, never thrown.
ClosureReport closure_check(const std::vector<SuperPolynomial>& pair_list,
                            const std::vector<SuperPolynomial>& span_list,
                            const BracketContext& ctx);

/// All pairs drawn from and expressed in the same list.
ClosureReport closure_check(const std::vector<SuperPolynomial>& integrals,
                            const BracketContext& ctx);

}  // namespace pmech

#endif
