#ifndef PMECH_BRACKET_HPP
#define PMECH_BRACKET_HPP

#include "pmech/superpoly.hpp"

namespace pmech {

/// Canonical-pair context for the generalized Poisson bracket.
struct BracketContext {
  VarTablePtr table;
  double tolerance = 1e-12;
};

/// Generalized Poisson bracket over all canonical pairs:
///   {f,g} = sum over pairs of  f_{,Q} dP(g) - (-1)^{deg f deg g} g_{,Q} dP(f)
/// with right derivatives on coordinates and left derivatives on momenta;
/// mixed-parity arguments are handled by bilinear decomposition. Even-even
/// and even-odd brackets are antisymmetric, odd-odd symmetric.
SuperPolynomial gpb(const SuperPolynomial& f, const SuperPolynomial& g,
                    const BracketContext& ctx);

/// Hamiltonian vector field applied to f: returns gpb(f, H). H must be even.
SuperPolynomial time_derivative(const SuperPolynomial& f, const SuperPolynomial& H,
                                const BracketContext& ctx);

/// Graded Jacobi combination
///   {f,{g,h}} + (-1)^{df(dg+dh)} {g,{h,f}} + (-1)^{dh(df+dg)} {h,{f,g}}
/// for parity-homogeneous inputs; vanishes identically up to roundoff.
SuperPolynomial jacobi_defect(const SuperPolynomial& f, const SuperPolynomial& g,
                              const SuperPolynomial& h, const BracketContext& ctx);

}  // namespace pmech

#endif
