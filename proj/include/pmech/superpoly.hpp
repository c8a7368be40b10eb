#ifndef PMECH_SUPERPOLY_HPP
#define PMECH_SUPERPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pmech/vartable.hpp"

namespace pmech {

/// Monomial in canonical form: exponents on the even variables plus a set of
/// odd variables (each appears at most once), the odd factors implicitly
/// sorted by the table's global odd ordering with sign +1.
struct Monomial {
  std::vector<std::uint8_t> even_exp;  // indexed by even slot
  std::uint64_t odd_mask = 0;          // bit per odd slot

  int even_degree() const;
  int odd_degree() const;
  int total_degree() const { return even_degree() + odd_degree(); }

  bool operator==(const Monomial& o) const {
    return odd_mask == o.odd_mask && even_exp == o.even_exp;
  }
  bool operator<(const Monomial& o) const {
    if (odd_mask != o.odd_mask) return odd_mask < o.odd_mask;
    return even_exp < o.even_exp;
  }
};

/// Sign of merging two canonical odd-factor sets (a's factors first), counting
/// the transpositions needed to restore ascending order. Returns 0 when the
/// sets overlap (a squared odd generator kills the term).
int merge_sign(std::uint64_t a, std::uint64_t b);

/// Finite complex-linear combination of monomials in commuting and
/// anticommuting variables; the universal phase-space function. Immutable in
/// spirit: all operations return new values.
class SuperPolynomial {
public:
  explicit SuperPolynomial(VarTablePtr table) : table_(std::move(table)) {}

  static SuperPolynomial zero(VarTablePtr table) { return SuperPolynomial(std::move(table)); }
  static SuperPolynomial constant(VarTablePtr table, Complex value);
  static SuperPolynomial variable(VarTablePtr table, int var_index);
  static SuperPolynomial variable(VarTablePtr table, const std::string& name);

  const VarTablePtr& table() const { return table_; }
  const std::map<Monomial, Complex>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Magnitude below which stored coefficients are dropped.
  static constexpr double kPruneThreshold = 1e-14;

  SuperPolynomial operator-() const;
  SuperPolynomial operator+(const SuperPolynomial& o) const;
  SuperPolynomial operator-(const SuperPolynomial& o) const;
  SuperPolynomial operator*(const SuperPolynomial& o) const;
  SuperPolynomial operator*(Complex c) const;
  SuperPolynomial& operator+=(const SuperPolynomial& o);
  SuperPolynomial& operator-=(const SuperPolynomial& o);

  /// Adds c * m, keeping canonical form. No pruning.
  void add_term(const Monomial& m, Complex c);
  void prune(double threshold = kPruneThreshold);

  /// Partial derivative extracting the variable at the left (right) end of
  /// each monomial; both coincide with the ordinary derivative for even
  /// variables.
  SuperPolynomial derivative_left(int var_index) const;
  SuperPolynomial derivative_right(int var_index) const;

  ParityClass parity() const;
  SuperPolynomial even_part() const;
  SuperPolynomial odd_part() const;
  /// Terms containing at least one odd variable.
  SuperPolynomial odd_sector_part() const;
  /// Terms containing no odd variable.
  SuperPolynomial even_sector_part() const;

  double max_abs_coeff() const;
  bool is_zero(double tol = 0.0) const { return max_abs_coeff() <= tol; }
  Complex coeff(const Monomial& m) const;
  int degree() const;

  std::string str() const;

private:
  void check_same_table(const SuperPolynomial& o) const;
  SuperPolynomial derivative(int var_index, bool left) const;

  VarTablePtr table_;
  std::map<Monomial, Complex> terms_;
};

inline SuperPolynomial operator*(Complex c, const SuperPolynomial& p) { return p * c; }

ParityClass parity_of(const SuperPolynomial& f);

/// All monomials of total degree <= max_degree over the table, as polynomials.
std::vector<SuperPolynomial> monomial_basis(const VarTablePtr& table, int max_degree);

std::string format_complex(Complex c);

}  // namespace pmech

#endif
