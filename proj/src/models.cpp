#include "pmech/models.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pmech {

namespace {

constexpr Complex kI{0.0, 1.0};
const double kSqrt2 = std::sqrt(2.0);

std::string numbered(const std::string& stem, int i, int n) {
  return n == 1 ? stem : stem + std::to_string(i);
}

VarTablePtr complex_table(int n) {
  std::vector<VarTable::PairDecl> pairs;
  for (int i = 1; i <= n; ++i)
    pairs.push_back({numbered("X", i, n), numbered("P", i, n), VarParity::Even});
  for (int i = 1; i <= n; ++i)
    pairs.push_back({numbered("theta", i, n), numbered("pi", i, n), VarParity::Odd});
  return VarTable::make(pairs);
}

VarTablePtr base_table_qp(int n) {
  std::vector<VarTable::PairDecl> pairs;
  for (int i = 1; i <= n; ++i)
    pairs.push_back({numbered("q", i, n), numbered("p", i, n), VarParity::Even});
  for (int i = 1; i <= n; ++i)
    pairs.push_back({numbered("theta", i, n), numbered("pi", i, n), VarParity::Odd});
  return VarTable::make(pairs);
}

SuperPolynomial var(const VarTablePtr& t, const std::string& name) {
  return SuperPolynomial::variable(t, name);
}

// q -> (X + iP)/sqrt(2), p -> (P + iX)/sqrt(2), fermions untouched
LinearCanonicalMap complexification(const VarTablePtr& base, const VarTablePtr& cplx, int n) {
  std::vector<SuperPolynomial> images;
  for (int i = 0; i < base->size(); ++i) {
    const VarInfo& vi = base->info(i);
    if (vi.parity == VarParity::Odd) {
      images.push_back(var(cplx, vi.name));
      continue;
    }
    int pair_index = base->even_slot(i) / 2 + 1;
    SuperPolynomial X = var(cplx, numbered("X", pair_index, n));
    SuperPolynomial P = var(cplx, numbered("P", pair_index, n));
    if (vi.role == VarRole::Coordinate)
      images.push_back((X + kI * P) * Complex{1.0 / kSqrt2, 0.0});
    else
      images.push_back((P + kI * X) * Complex{1.0 / kSqrt2, 0.0});
  }
  return {base, cplx, std::move(images)};
}

// X -> (q - ip)/sqrt(2), P -> (p - iq)/sqrt(2)
LinearCanonicalMap decomplexification(const VarTablePtr& cplx, const VarTablePtr& base, int n) {
  std::vector<SuperPolynomial> images;
  for (int i = 0; i < cplx->size(); ++i) {
    const VarInfo& vi = cplx->info(i);
    if (vi.parity == VarParity::Odd) {
      images.push_back(var(base, vi.name));
      continue;
    }
    int pair_index = cplx->even_slot(i) / 2 + 1;
    SuperPolynomial q = var(base, numbered("q", pair_index, n));
    SuperPolynomial p = var(base, numbered("p", pair_index, n));
    if (vi.role == VarRole::Coordinate)
      images.push_back((q - kI * p) * Complex{1.0 / kSqrt2, 0.0});
    else
      images.push_back((p - kI * q) * Complex{1.0 / kSqrt2, 0.0});
  }
  return {cplx, base, std::move(images)};
}

PhaseVectors standard_phase_vectors(const VarTablePtr& t, int n) {
  PhaseVectors pv;
  for (int i = 1; i <= n; ++i) pv.momenta.push_back(var(t, numbered("P", i, n)));
  for (int i = 1; i <= n; ++i) pv.momenta.push_back(var(t, numbered("pi", i, n)));
  for (int i = 1; i <= n; ++i) pv.coordinates.push_back(var(t, numbered("X", i, n)));
  for (int i = 1; i <= n; ++i) pv.coordinates.push_back(var(t, numbered("theta", i, n)));
  return pv;
}

std::string padded(const std::string& stem, int i, int width) {
  std::ostringstream os;
  os << i;
  std::string digits = os.str();
  while (static_cast<int>(digits.size()) < width) digits.insert(digits.begin(), '0');
  return stem + digits;
}

// the four u(1,1)-type invariants of one (X,P,theta,pi) sector
void attach_sector_integrals(ModelInstance& model, const std::string& suffix,
                             const SuperPolynomial& X, const SuperPolynomial& P,
                             const SuperPolynomial& Th, const SuperPolynomial& Pi) {
  model.integrals.emplace("Z0" + suffix, P * X + Pi * Th);
  model.integrals.emplace("Z1" + suffix, P * Th + Pi * X);
  model.integrals.emplace("Z2" + suffix, kI * (Pi * X - P * Th));
  model.integrals.emplace("Z3" + suffix, P * X - Pi * Th);
}

}  // namespace

PowerMonomial pm_product(const PowerMonomial& a, const PowerMonomial& b) {
  return {a.coeff * b.coeff, a.x_exp + b.x_exp, a.p_exp + b.p_exp};
}

PowerMonomial pm_bracket(const PowerMonomial& a, const PowerMonomial& b) {
  const double factor = a.x_exp * b.p_exp - b.x_exp * a.p_exp;
  if (factor == 0.0) return {Complex{0.0, 0.0}, 0.0, 0.0};
  return {a.coeff * b.coeff * factor, a.x_exp + b.x_exp - 1.0, a.p_exp + b.p_exp - 1.0};
}

ModelInstance build_1d() {
  const int n = 1;
  VarTablePtr t = complex_table(n);
  VarTablePtr base = base_table_qp(n);
  ModelInstance model{.name = "1d",
                      .table = t,
                      .hamiltonian = SuperPolynomial::zero(t),
                      .integrals = {},
                      .phase_vectors = standard_phase_vectors(t, n),
                      .sector_charges = {},
                      .charges_2d = {},
                      .params = {},
                      .base_table = base,
                      .base_hamiltonian = {},
                      .to_complex = complexification(base, t, n),
                      .to_base = decomplexification(t, base, n)};
  SuperPolynomial X = var(t, "X"), P = var(t, "P"), Th = var(t, "theta"), Pi = var(t, "pi");
  model.hamiltonian = kI * (P * X + Pi * Th);
  SuperPolynomial q = var(base, "q"), p = var(base, "p");
  model.base_hamiltonian =
      0.5 * (p * p + q * q) + kI * (var(base, "pi") * var(base, "theta"));
  attach_sector_integrals(model, "", X, P, Th, Pi);
  model.sector_charges.push_back(build_supercharges_1d(kSqrt2, 0.0, t));
  return model;
}

ModelInstance build_2d(double omega) {
  const int n = 2;
  VarTablePtr t = complex_table(n);
  VarTablePtr base = base_table_qp(n);
  ModelInstance model{.name = "2d",
                      .table = t,
                      .hamiltonian = SuperPolynomial::zero(t),
                      .integrals = {},
                      .phase_vectors = standard_phase_vectors(t, n),
                      .sector_charges = {},
                      .charges_2d = build_supercharges_2d(t),
                      .params = {{"omega", omega}},
                      .base_table = base,
                      .base_hamiltonian = {},
                      .to_complex = complexification(base, t, n),
                      .to_base = decomplexification(t, base, n)};
  const auto& pv = model.phase_vectors;
  for (size_t j = 0; j < pv.momenta.size(); ++j)
    model.hamiltonian += (kI * omega) * (pv.momenta[j] * pv.coordinates[j]);

  auto gens = unn_generators(n);
  for (size_t k = 0; k < gens.size(); ++k)
    model.integrals.emplace(padded("C", static_cast<int>(k), 2), first_integral(gens[k], pv));

  SuperPolynomial X1 = var(t, "X1"), P1 = var(t, "P1"), X2 = var(t, "X2"), P2 = var(t, "P2");
  SuperPolynomial Th1 = var(t, "theta1"), Pi1 = var(t, "pi1");
  SuperPolynomial Th2 = var(t, "theta2"), Pi2 = var(t, "pi2");
  // classical invariants in their base-coordinate normalization
  model.integrals.emplace("B1", kI * (P1 * X2 + P2 * X1));        // p1 p2 + q1 q2
  model.integrals.emplace("B2", P1 * X2 - P2 * X1);               // q2 p1 - q1 p2
  model.integrals.emplace("B3", (2.0 * kI) * (P1 * X1 - P2 * X2));
  model.integrals.emplace("E", kI * (P1 * X1 + P2 * X2));
  model.integrals.emplace("F1", 0.5 * (Pi1 * Th2 + Pi2 * Th1));
  model.integrals.emplace("F2", Complex{0.0, -0.5} * (Pi1 * Th2) + Complex{0.0, 0.5} * (Pi2 * Th1));
  model.integrals.emplace("F3", 0.5 * (Pi1 * Th1 - Pi2 * Th2));
  return model;
}

ModelInstance build_nd(int n) {
  if (n < 1) throw std::invalid_argument("build_nd requires n >= 1");
  VarTablePtr t = complex_table(n);
  ModelInstance model{.name = "nn" + std::to_string(n),
                      .table = t,
                      .hamiltonian = SuperPolynomial::zero(t),
                      .integrals = {},
                      .phase_vectors = standard_phase_vectors(t, n),
                      .sector_charges = {},
                      .charges_2d = {},
                      .params = {{"n", static_cast<double>(n)}},
                      .base_table = nullptr,
                      .base_hamiltonian = {},
                      .to_complex = {},
                      .to_base = {}};
  const auto& pv = model.phase_vectors;
  for (size_t j = 0; j < pv.momenta.size(); ++j)
    model.hamiltonian += kI * (pv.momenta[j] * pv.coordinates[j]);
  auto gens = unn_generators(n);
  const int width = gens.size() > 99 ? 3 : 2;
  for (size_t k = 0; k < gens.size(); ++k)
    model.integrals.emplace(padded("C", static_cast<int>(k), width), first_integral(gens[k], pv));
  return model;
}

PuDiagonalization pu_diagonalize(double mu1, double mu2, double rho) {
  Eigen::Matrix2d v;
  v << mu1, -rho, -rho, mu2;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(v);
  const double lo = es.eigenvalues()(0), hi = es.eigenvalues()(1);
  if (lo <= 0.0) {
    std::ostringstream os;
    os << "potential matrix not positive definite: eigenvalues " << lo << ", " << hi;
    throw std::domain_error(os.str());
  }
  PuDiagonalization d;
  d.a = std::sqrt(hi);
  d.b = std::sqrt(lo);
  if (std::abs(rho) == 0.0 && mu1 == mu2) {
    d.angle = 0.0;
  } else {
    Eigen::Vector2d va = es.eigenvectors().col(1);
    if (va(0) < 0.0) va = -va;
    d.angle = std::atan2(va(1), va(0));
  }
  const double c = std::cos(d.angle), s = std::sin(d.angle);
  Eigen::Matrix2d r;
  r << c, s, -s, c;
  Eigen::Matrix2d rebuilt = r.transpose() * Eigen::Vector2d(hi, lo).asDiagonal() * r;
  d.reconstruction_error = (rebuilt - v).cwiseAbs().maxCoeff();
  return d;
}

ModelInstance build_pu_scheme1(double mu1, double mu2, double rho) {
  if (mu1 <= 0.0 || mu2 <= 0.0 || mu1 * mu2 <= rho * rho) {
    // surface the eigenvalues in the error
    pu_diagonalize(mu1, mu2, rho);
    throw std::domain_error("potential matrix not positive definite");
  }
  PuDiagonalization diag = pu_diagonalize(mu1, mu2, rho);
  const double a = diag.a, b = diag.b, c = std::cos(diag.angle), s = std::sin(diag.angle);

  VarTablePtr t = complex_table(2);
  VarTablePtr mid = base_table_qp(2);
  VarTablePtr base = VarTable::make({{"x", "px", VarParity::Even},
                                     {"y", "py", VarParity::Even},
                                     {"theta1", "pi1", VarParity::Odd},
                                     {"theta2", "pi2", VarParity::Odd}});

  // rotation to the normal modes
  std::vector<SuperPolynomial> rot;
  rot.push_back(c * var(mid, "q1") - s * var(mid, "q2"));   // x
  rot.push_back(c * var(mid, "p1") - s * var(mid, "p2"));   // px
  rot.push_back(s * var(mid, "q1") + c * var(mid, "q2"));   // y
  rot.push_back(s * var(mid, "p1") + c * var(mid, "p2"));   // py
  rot.push_back(var(mid, "theta1"));
  rot.push_back(var(mid, "pi1"));
  rot.push_back(var(mid, "theta2"));
  rot.push_back(var(mid, "pi2"));
  LinearCanonicalMap rotation(base, mid, std::move(rot));

  // unit-frequency rescale of each sector
  std::vector<SuperPolynomial> resc;
  resc.push_back(var(mid, "q1") * Complex{1.0 / std::sqrt(a), 0.0});
  resc.push_back(var(mid, "p1") * Complex{std::sqrt(a), 0.0});
  resc.push_back(var(mid, "q2") * Complex{1.0 / std::sqrt(b), 0.0});
  resc.push_back(var(mid, "p2") * Complex{std::sqrt(b), 0.0});
  resc.push_back(var(mid, "theta1"));
  resc.push_back(var(mid, "pi1"));
  resc.push_back(var(mid, "theta2"));
  resc.push_back(var(mid, "pi2"));
  LinearCanonicalMap rescale(mid, mid, std::move(resc));

  LinearCanonicalMap to_complex = rotation.then(rescale).then(complexification(mid, t, 2));

  ModelInstance model{.name = "pu1",
                      .table = t,
                      .hamiltonian = SuperPolynomial::zero(t),
                      .integrals = {},
                      .phase_vectors = standard_phase_vectors(t, 2),
                      .sector_charges = {},
                      .charges_2d = {},
                      .params = {{"mu1", mu1},
                                 {"mu2", mu2},
                                 {"rho", rho},
                                 {"a", a},
                                 {"b", b},
                                 {"alpha", diag.angle}},
                      .base_table = base,
                      .base_hamiltonian = {},
                      .to_complex = to_complex,
                      .to_base = {}};

  SuperPolynomial X1 = var(t, "X1"), P1 = var(t, "P1"), X2 = var(t, "X2"), P2 = var(t, "P2");
  SuperPolynomial Th1 = var(t, "theta1"), Pi1 = var(t, "pi1");
  SuperPolynomial Th2 = var(t, "theta2"), Pi2 = var(t, "pi2");
  model.hamiltonian =
      (kI * a) * (P1 * X1 + Pi1 * Th1) + (kI * b) * (P2 * X2 + Pi2 * Th2);

  SuperPolynomial x = var(base, "x"), px = var(base, "px");
  SuperPolynomial y = var(base, "y"), py = var(base, "py");
  model.base_hamiltonian = 0.5 * (px * px + py * py) +
                           0.5 * (mu1 * (x * x) + mu2 * (y * y)) - rho * (x * y) +
                           (kI * a) * (var(base, "pi1") * var(base, "theta1")) +
                           (kI * b) * (var(base, "pi2") * var(base, "theta2"));

  attach_sector_integrals(model, "_1", X1, P1, Th1, Pi1);
  attach_sector_integrals(model, "_2", X2, P2, Th2, Pi2);
  model.sector_charges.push_back(build_supercharges_1d(kSqrt2, 0.0, t, "X1", "P1", "theta1", "pi1"));
  model.sector_charges.push_back(build_supercharges_1d(kSqrt2, 0.0, t, "X2", "P2", "theta2", "pi2"));
  return model;
}

PuScheme2Report build_pu_scheme2(double a, double b) {
  if (a <= 0.0 || b <= 0.0) throw std::domain_error("scheme-two frequencies must be positive");
  auto tilde = [](double w) {
    PowerMonomial xt{Complex{std::sqrt(w), 0.0}, 0.5 * (1.0 + 1.0 / w), 0.5 * (1.0 - 1.0 / w)};
    PowerMonomial pt{Complex{std::sqrt(w), 0.0}, 0.5 * (1.0 - 1.0 / w), 0.5 * (1.0 + 1.0 / w)};
    return std::make_pair(xt, pt);
  };
  PuScheme2Report rep;
  std::tie(rep.x1t, rep.p1t) = tilde(a);
  std::tie(rep.x2t, rep.p2t) = tilde(b);

  auto defect_against = [](const PowerMonomial& got, Complex coeff, double xe, double pe) {
    return std::max({std::abs(got.coeff - coeff), std::abs(got.x_exp - xe),
                     std::abs(got.p_exp - pe)});
  };
  rep.bracket_defect = std::max(defect_against(pm_bracket(rep.x1t, rep.p1t), 1.0, 0.0, 0.0),
                                defect_against(pm_bracket(rep.x2t, rep.p2t), 1.0, 0.0, 0.0));
  // brackets across sectors vanish identically: the pairs share no variables
  rep.cross_defect = 0.0;
  rep.product_defect = std::max(defect_against(pm_product(rep.p1t, rep.x1t), a, 1.0, 1.0),
                                defect_against(pm_product(rep.p2t, rep.x2t), b, 1.0, 1.0));
  rep.ok = rep.bracket_defect < 1e-12 && rep.product_defect < 1e-12;
  return rep;
}

ModelInstance build_isotonic(double k, double l, double m) {
  if (k <= 0.0 || m <= 0.0) throw std::domain_error("isotonic requires k > 0 and m > 0");
  const double omega = std::sqrt(k);
  ModelInstance model = build_2d(omega);
  model.name = "isotonic";
  model.params = {{"k", k}, {"l", l}, {"m", m}, {"omega", omega}};

  VarTablePtr base = VarTable::make({{"x", "px", VarParity::Even},
                                     {"y", "py", VarParity::Even},
                                     {"theta1", "pi1", VarParity::Odd},
                                     {"theta2", "pi2", VarParity::Odd}});
  model.base_table = base;

  // rescale r -> r/sqrt(w), p -> sqrt(w) p, then complexify
  const double rw = std::sqrt(omega);
  VarTablePtr t = model.table;
  auto sector = [&](int i) {
    SuperPolynomial X = var(t, "X" + std::to_string(i)), P = var(t, "P" + std::to_string(i));
    return std::make_pair((X + kI * P) * Complex{1.0 / (kSqrt2 * rw), 0.0},
                          (P + kI * X) * Complex{rw / kSqrt2, 0.0});
  };
  std::vector<SuperPolynomial> images;
  auto [x_img, px_img] = sector(1);
  auto [y_img, py_img] = sector(2);
  images.push_back(x_img);
  images.push_back(px_img);
  images.push_back(y_img);
  images.push_back(py_img);
  images.push_back(var(t, "theta1"));
  images.push_back(var(t, "pi1"));
  images.push_back(var(t, "theta2"));
  images.push_back(var(t, "pi2"));
  model.to_complex = LinearCanonicalMap(base, t, std::move(images));
  model.to_base = {};

  SuperPolynomial x = var(base, "x"), px = var(base, "px");
  SuperPolynomial y = var(base, "y"), py = var(base, "py");
  model.base_hamiltonian =
      0.5 * (px * px + py * py) + 0.5 * omega * omega * (x * x + y * y) +
      (kI * omega) * (var(base, "pi1") * var(base, "theta1") +
                      var(base, "pi2") * var(base, "theta2"));
  return model;
}

double isotonic_identity_error(double k, double l, double m,
                               const std::vector<std::pair<double, double>>& rp_samples) {
  double worst = 0.0;
  const double a = k, b = l * l / (2.0 * m);
  for (auto [r, p] : rp_samples) {
    const double central = p * p / (2.0 * m) + l * l / (2.0 * m * r * r) + k * r * r;
    const double isotonic = p * p / (2.0 * m) + a * r * r + b / (r * r);
    worst = std::max(worst, std::abs(central - isotonic) / std::abs(central));
  }
  return worst;
}

CanonicalReport verify_canonical(const LinearCanonicalMap& map, const BracketContext& target_ctx) {
  const VarTablePtr& src = map.source();
  CanonicalReport report;
  for (int i = 0; i < src->size(); ++i) {
    for (int j = 0; j < src->size(); ++j) {
      const VarInfo& vi = src->info(i);
      Complex expected{0.0, 0.0};
      if (vi.partner == j) {
        if (vi.parity == VarParity::Even)
          expected = vi.role == VarRole::Coordinate ? 1.0 : -1.0;
        else
          expected = 1.0;  // odd-odd bracket is symmetric
      }
      SuperPolynomial br = gpb(map.image(i), map.image(j), target_ctx);
      double defect = (br - SuperPolynomial::constant(target_ctx.table, expected)).max_abs_coeff();
      report.entries.push_back({src->name(i), src->name(j), expected, defect});
      report.max_defect = std::max(report.max_defect, defect);
    }
  }
  return report;
}

CanonicalReport verify_canonical(const BracketContext& ctx) {
  return verify_canonical(LinearCanonicalMap::identity(ctx.table), ctx);
}

}  // namespace pmech
