#include "pmech/bracket.hpp"

#include <stdexcept>

namespace pmech {

namespace {

void check_table(const SuperPolynomial& f, const BracketContext& ctx) {
  if (f.table().get() != ctx.table.get() && !f.table()->same_as(*ctx.table))
    throw std::invalid_argument("variable table mismatch");
}

// homogeneous bracket; df, dg in {0,1}
SuperPolynomial gpb_homogeneous(const SuperPolynomial& f, int df,
                                const SuperPolynomial& g, int dg,
                                const BracketContext& ctx) {
  SuperPolynomial acc = SuperPolynomial::zero(f.table());
  const double sign = (df & dg) ? -1.0 : 1.0;
  for (const auto& pair : ctx.table->pairs()) {
    acc += f.derivative_right(pair.coordinate) * g.derivative_left(pair.momentum);
    acc -= sign * (g.derivative_right(pair.coordinate) * f.derivative_left(pair.momentum));
  }
  return acc;
}

}  // namespace

SuperPolynomial gpb(const SuperPolynomial& f, const SuperPolynomial& g,
                    const BracketContext& ctx) {
  check_table(f, ctx);
  check_table(g, ctx);
  SuperPolynomial result = SuperPolynomial::zero(ctx.table);
  const SuperPolynomial fe = f.even_part(), fo = f.odd_part();
  const SuperPolynomial ge = g.even_part(), go = g.odd_part();
  if (!fe.empty() && !ge.empty()) result += gpb_homogeneous(fe, 0, ge, 0, ctx);
  if (!fe.empty() && !go.empty()) result += gpb_homogeneous(fe, 0, go, 1, ctx);
  if (!fo.empty() && !ge.empty()) result += gpb_homogeneous(fo, 1, ge, 0, ctx);
  if (!fo.empty() && !go.empty()) result += gpb_homogeneous(fo, 1, go, 1, ctx);
  return result;
}

SuperPolynomial time_derivative(const SuperPolynomial& f, const SuperPolynomial& H,
                                const BracketContext& ctx) {
  if (parity_of(H) != ParityClass::Even)
    throw std::invalid_argument("Hamiltonian must be even");
  return gpb(f, H, ctx);
}

SuperPolynomial jacobi_defect(const SuperPolynomial& f, const SuperPolynomial& g,
                              const SuperPolynomial& h, const BracketContext& ctx) {
  const ParityClass pf = parity_of(f), pg = parity_of(g), ph = parity_of(h);
  if (pf == ParityClass::Mixed || pg == ParityClass::Mixed || ph == ParityClass::Mixed)
    throw std::invalid_argument("jacobi_defect requires parity-homogeneous inputs");
  const int df = pf == ParityClass::Odd, dg = pg == ParityClass::Odd, dh = ph == ParityClass::Odd;
  const double s1 = (df * (dg + dh)) % 2 ? -1.0 : 1.0;
  const double s2 = (dh * (df + dg)) % 2 ? -1.0 : 1.0;
  SuperPolynomial acc = gpb(f, gpb(g, h, ctx), ctx);
  acc += s1 * gpb(g, gpb(h, f, ctx), ctx);
  acc += s2 * gpb(h, gpb(f, g, ctx), ctx);
  return acc;
}

}  // namespace pmech
