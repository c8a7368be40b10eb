#ifndef PMECH_SUPERCHARGE_HPP
#define PMECH_SUPERCHARGE_HPP

#include <string>
#include <vector>

#include "pmech/bracket.hpp"
#include "pmech/span.hpp"

namespace pmech {

/// Conjugate pair of odd charges Q = alpha P theta + beta X pi and
/// Qbar = conj(beta) P theta + conj(alpha) X pi over one bosonic and one
/// fermionic canonical pair.
struct SuperchargePair {
  SuperPolynomial Q;
  SuperPolynomial Qbar;
  Complex alpha{0.0, 0.0};
  Complex beta{0.0, 0.0};
};

/// Builds the pair on a table declaring X, P (even) and theta, pi (odd).
/// Requires |alpha|^2 != |beta|^2; the variable names default to the
/// one-dimensional model but can be overridden for sector-wise use.
SuperchargePair build_supercharges_1d(Complex alpha, Complex beta, const VarTablePtr& table,
                                      const std::string& x = "X", const std::string& p = "P",
                                      const std::string& theta = "theta",
                                      const std::string& pi = "pi");

struct NilpotencyDefects {
  SuperPolynomial qq;
  SuperPolynomial qbar_qbar;
  double operator_defect_q = 0.0;     // max |{{f,Q},Q}| over the test basis
  double operator_defect_qbar = 0.0;  // max |{{f,Qbar},Qbar}|
};

/// Bracket squares of the charges plus the squared operator action on every
/// monomial of total degree <= 3.
NilpotencyDefects nilpotency_defects(const SuperchargePair& pair, const BracketContext& ctx);

struct SusyTableRow {
  std::string variable;
  SuperPolynomial with_q;
  SuperPolynomial with_qbar;
};

/// Brackets of every variable with Q and Qbar.
std::vector<SusyTableRow> susy_transform_table(const SuperchargePair& pair,
                                               const BracketContext& ctx);

struct BosonFermionImage {
  SuperPolynomial full;               // {{E,Q},Qbar}
  SuperPolynomial fermionic_part;     // terms containing odd variables
  SuperPolynomial bosonic_remainder;  // purely bosonic terms (proportional to E)
};

/// Subsequent action of {.,Q} and {.,Qbar} on an even function. The fermionic
/// component carries the image of the bosonic invariant; the remainder stays
/// proportional to the input.
BosonFermionImage map_boson_fermion(const SuperPolynomial& e_bosonic,
                                    const SuperchargePair& pair, const BracketContext& ctx);

/// The four two-dimensional charges built from sums and differences of the
/// sector variables.
struct Supercharges2d {
  SuperPolynomial Q1, Qbar1, Q2, Qbar2;
};

Supercharges2d build_supercharges_2d(const VarTablePtr& table);

struct Algebra2d {
  SuperPolynomial m11, m12, m21, m22;  // {Q_i, Qbar_j}
  SuperPolynomial h0, h1;              // M = 2(sigma0 h0 + sigma3 h1)
  double residual = 0.0;               // off-diagonal magnitude
};

/// Decomposes {Q_i,Qbar_j} in the sigma0/sigma3 basis; throws if the
/// off-diagonal residual exceeds the context tolerance.
Algebra2d supercharge_algebra_2d(const Supercharges2d& charges, const BracketContext& ctx);

struct RSymmetryReport {
  double max_qq_defect = 0.0;    // {Q_i,Q_j} and {Qbar_i,Qbar_j} after rotation
  double max_h_defect = 0.0;     // change of h0, h1 under the rotation
  double residual = 0.0;         // decomposition residual after rotation
  bool ok = false;
};

/// Rotates Q1 -> e^{i phi} Q1, Q2 -> e^{i psi} Q2 (bars conjugated) and
/// re-verifies the whole algebra.
RSymmetryReport r_symmetry_check(const Supercharges2d& charges, double phi, double psi,
                                 const BracketContext& ctx);

/// Brackets of every variable with a given 2-d charge combination.
std::vector<SusyTableRow> susy_transform_table_2d(const SuperPolynomial& q,
                                                  const SuperPolynomial& qbar,
                                                  const BracketContext& ctx);

}  // namespace pmech

#endif
