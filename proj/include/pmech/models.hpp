#ifndef PMECH_MODELS_HPP
#define PMECH_MODELS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pmech/linmap.hpp"
#include "pmech/supercharge.hpp"
#include "pmech/symmetry.hpp"

namespace pmech {

/// One oscillator family: variables, Hamiltonian, named first integrals and
/// supercharges, plus the base-coordinate table and the canonical maps
/// between the two bases where applicable.
struct ModelInstance {
  std::string name;
  VarTablePtr table;  // complex (X,P) basis
  SuperPolynomial hamiltonian;
  std::map<std::string, SuperPolynomial> integrals;
  PhaseVectors phase_vectors;
  std::vector<SuperchargePair> sector_charges;
  std::optional<Supercharges2d> charges_2d;
  std::map<std::string, double> params;

  VarTablePtr base_table;  // real (q,p)-type basis, when registered
  std::optional<SuperPolynomial> base_hamiltonian;
  std::optional<LinearCanonicalMap> to_complex;  // base vars -> complex expressions
  std::optional<LinearCanonicalMap> to_base;     // complex vars -> base expressions

  BracketContext context(double tolerance = 1e-12) const { return {table, tolerance}; }
};

/// c * X^a P^b with real exponents on one bosonic pair; closed under the
/// classical bracket {X^aP^b, X^cP^d} = (ad - cb) X^{a+c-1} P^{b+d-1}.
struct PowerMonomial {
  Complex coeff{1.0, 0.0};
  double x_exp = 0.0;
  double p_exp = 0.0;
};

PowerMonomial pm_product(const PowerMonomial& a, const PowerMonomial& b);
PowerMonomial pm_bracket(const PowerMonomial& a, const PowerMonomial& b);

/// Unit-frequency oscillator with one bosonic and one fermionic pair.
ModelInstance build_1d();

/// Isotropic oscillator with two bosonic and two fermionic pairs.
ModelInstance build_2d(double omega = 1.0);

/// n bosonic plus n fermionic pairs with the 4n^2 u(n,n) first integrals.
ModelInstance build_nd(int n);

/// Fourth-order oscillator in two-oscillator form: diagonalizes the potential
/// matrix [[mu1, -rho], [-rho, mu2]], composes rotation, rescaling and
/// complexification, and attaches the two frequency sectors. Requires
/// mu1, mu2 > 0 and mu1*mu2 > rho^2.
ModelInstance build_pu_scheme1(double mu1, double mu2, double rho);

/// Frequency data recovered from the potential matrix.
struct PuDiagonalization {
  double a = 0.0, b = 0.0;  // frequencies, a >= b
  double angle = 0.0;       // rotation angle
  double reconstruction_error = 0.0;
};
PuDiagonalization pu_diagonalize(double mu1, double mu2, double rho);

/// Fractional-power canonical pairs mapping the anisotropic bosonic
/// oscillator to an isotropic one; checked entirely inside the PowerMonomial
/// algebra (exponent arithmetic is formal, no numeric fractional powers).
struct PuScheme2Report {
  PowerMonomial x1t, p1t, x2t, p2t;
  double bracket_defect = 0.0;  // |{X~,P~} - 1| per sector, max over sectors
  double cross_defect = 0.0;    // cross-sector brackets (disjoint pairs)
  double product_defect = 0.0;  // |P~X~ - a PX|, coefficient and exponents
  bool ok = false;
};
PuScheme2Report build_pu_scheme2(double a, double b);

/// Planar central-force reduction of the isotonic oscillator plus its
/// supersymmetric lift at frequency sqrt(k).
ModelInstance build_isotonic(double k, double l, double m);

/// Numeric identity between the central-force Hamiltonian and the isotonic
/// form with a = k, b = l^2/(2m); returns the max relative error over the
/// (r, p) samples.
double isotonic_identity_error(double k, double l, double m,
                               const std::vector<std::pair<double, double>>& rp_samples);

struct CanonicalCheck {
  std::string lhs, rhs;
  Complex expected;
  double defect = 0.0;
};

struct CanonicalReport {
  std::vector<CanonicalCheck> entries;
  double max_defect = 0.0;
  bool ok(double tol) const { return max_defect <= tol; }
};

/// Evaluates all pairwise brackets of the mapped variables in the target
/// basis and compares against the source's canonical table.
CanonicalReport verify_canonical(const LinearCanonicalMap& map, const BracketContext& target_ctx);

/// Canonical bracket table of a basis itself (identity map).
CanonicalReport verify_canonical(const BracketContext& ctx);

}  // namespace pmech

#endif
