#ifndef PMECH_NAMBU_HPP
#define PMECH_NAMBU_HPP

#include <array>
#include <optional>
#include <string>

#include "pmech/bracket.hpp"
#include "pmech/span.hpp"

namespace pmech {

/// Product conventions for the graded four-row Jacobian. The two uniform
/// orders multiply each permutation term strictly by row or by column; the
/// pair-graded form expands by complementary 2x2 blocks over the two
/// canonical column pairs, with the single-pair bracket as each block and a
/// graded row-crossing sign (even-even and even-odd crossings flip the sign,
/// odd-odd crossings do not). Only the pair-graded form reproduces the
/// bracket dynamics for rows of both parities.
enum class DetOrder { RowMajor, ColumnMajor, PairGraded };

/// Four-bracket specification: three conserved quantities as rows of a graded
/// Jacobian, a conserved divisor and the normalization making
///   normalization * det = divisor * dF/dt
/// an identity. The derivative flavor is fixed: left with respect to momenta,
/// right with respect to coordinates.
struct NambuSpec {
  std::array<SuperPolynomial, 3> hamiltonians;
  SuperPolynomial divisor;
  Complex normalization{0.5, 0.0};
  DetOrder order = DetOrder::PairGraded;
  std::array<int, 4> variable_order{};  // momentum, coordinate per pair, as printed
};

/// Builds and validates a spec against the model Hamiltonian: product
/// conventions are tried in the order row-major, column-major, pair-graded,
/// the normalization is recovered from the F = P case, and a convention is
/// accepted only when the defect vanishes on the full monomial basis of
/// degree <= 2. Throws when no convention reproduces the dynamics (that also
/// covers degenerate Hamiltonian triples).
NambuSpec make_nambu_spec(const std::array<SuperPolynomial, 3>& hamiltonians,
                          const SuperPolynomial& divisor, const SuperPolynomial& h,
                          const std::array<int, 4>& variable_order, const BracketContext& ctx);

/// Graded Jacobian with rows (F, spec.hamiltonians...) and the spec's column
/// variables; multilinear over parity decompositions of the rows.
SuperPolynomial graded_jacobian(const SuperPolynomial& f, const NambuSpec& spec,
                                const BracketContext& ctx);

/// normalization * jacobian(F) - divisor * gpb(F, H); zero certifies that the
/// four-bracket reproduces the Hamiltonian dynamics without dividing by the
/// (odd, non-invertible) divisor.
SuperPolynomial nambu_defect(const SuperPolynomial& f, const SuperPolynomial& h,
                             const NambuSpec& spec, const BracketContext& ctx);

struct QuotientResult {
  enum class Status { Success, Ambiguous, Failure };
  Status status = Status::Failure;
  std::optional<SuperPolynomial> quotient;
  double residual = 0.0;
};

/// Finds R with J = D * R by least squares over monomial coefficients.
/// Candidates annihilated by D are excluded; a remaining kernel is reported
/// as ambiguous.
QuotientResult exact_quotient(const SuperPolynomial& j, const SuperPolynomial& d);

/// Determinant with four given conserved quantities as rows.
SuperPolynomial nambu_bracket_of_hamiltonians(const std::array<SuperPolynomial, 4>& rows,
                                              const NambuSpec& spec, const BracketContext& ctx);

std::string to_string(DetOrder order);

}  // namespace pmech

#endif
