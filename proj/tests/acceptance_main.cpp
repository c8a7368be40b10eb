// Acceptance battery: every contract the library promises, one line each.
// Usage: acceptance [path-to-cli]  (the CLI checks are skipped-as-failure
// when the path is missing, so always pass it).

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "oracle.hpp"
#include "pmech/dynamics.hpp"
#include "pmech/models.hpp"
#include "pmech/nambu.hpp"
#include "pmech/parser.hpp"
#include "pmech/report.hpp"
#include "pmech/suites.hpp"

using namespace pmech;

namespace {

const Complex kI{0.0, 1.0};
const double kSqrt2 = std::sqrt(2.0);

int g_failures = 0;

void report_line(int id, const std::string& what, bool ok, double defect, double tol) {
  std::ostringstream os;
  os << (ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << what << "  (max defect "
     << defect << ", tolerance " << tol << ")";
  std::cout << os.str() << "\n";
  if (!ok) ++g_failures;
}

void check(int id, const std::string& what, double defect, double tol) {
  report_line(id, what, defect <= tol, defect, tol);
}

double scalar_or_fail(const std::optional<Complex>& c) {
  return c ? std::abs(*c) : 0.0;
}

// ---------------------------------------------------------------- criteria

void criterion_1_canonical_tables() {
  ModelInstance model = build_1d();
  double defect = verify_canonical(model.context()).max_defect;
  defect = std::max(defect, verify_canonical(BracketContext{model.base_table}).max_defect);
  defect = std::max(defect,
                    verify_canonical(*model.to_complex, model.context()).max_defect);
  check(1, "canonical bracket tables in both bases", defect, 1e-12);
}

void criterion_2_jacobi() {
  ModelInstance model = build_1d();
  BracketContext ctx = model.context();
  std::mt19937 rng(101);
  double worst = 0.0;
  for (int it = 0; it < 100; ++it) {
    SuperPolynomial f = testing::random_homogeneous(model.table, it & 1, 3, rng);
    SuperPolynomial g = testing::random_homogeneous(model.table, (it >> 1) & 1, 3, rng);
    SuperPolynomial h = testing::random_homogeneous(model.table, (it >> 2) & 1, 3, rng);
    worst = std::max(worst, jacobi_defect(f, g, h, ctx).max_abs_coeff());
  }
  check(2, "graded Jacobi identity on 100 random homogeneous triples", worst, 1e-12);
}

void criterion_3_supercharge_algebra_1d() {
  ModelInstance model = build_1d();
  BracketContext ctx = model.context();
  double worst = 0.0;
  for (auto [alpha, beta] : {std::pair<Complex, Complex>{kSqrt2, 0.0}, {0.0, kSqrt2}}) {
    SuperchargePair pair = build_supercharges_1d(alpha, beta, model.table);
    worst = std::max({worst, gpb(pair.Q, pair.Q, ctx).max_abs_coeff(),
                      gpb(pair.Qbar, pair.Qbar, ctx).max_abs_coeff(),
                      ((0.5 * kI) * gpb(pair.Q, pair.Qbar, ctx) - model.hamiltonian)
                          .max_abs_coeff()});
  }
  const VarTablePtr& t = model.table;
  SuperPolynomial pattern = SuperPolynomial::variable(t, "P") * SuperPolynomial::variable(t, "X") +
                            SuperPolynomial::variable(t, "pi") *
                                SuperPolynomial::variable(t, "theta");
  std::mt19937 rng(103);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  int done = 0;
  while (done < 10) {
    Complex alpha{u(rng), u(rng)}, beta{u(rng), u(rng)};
    if (std::abs(std::norm(alpha) - std::norm(beta)) < 1e-3) continue;
    SuperchargePair pair = build_supercharges_1d(alpha, beta, model.table);
    const double w = std::norm(alpha) + std::norm(beta);
    worst = std::max(worst, (gpb(pair.Q, pair.Qbar, ctx) - w * pattern).max_abs_coeff());
    ++done;
  }
  check(3, "one-dimensional supercharge algebra (named and random parameters)", worst, 1e-12);
}

void criterion_4_nilpotency() {
  ModelInstance model = build_1d();
  BracketContext ctx = model.context();
  double worst = 0.0;
  for (auto [alpha, beta] : {std::pair<Complex, Complex>{kSqrt2, 0.0}, {0.0, kSqrt2}}) {
    SuperchargePair pair = build_supercharges_1d(alpha, beta, model.table);
    NilpotencyDefects nil = nilpotency_defects(pair, ctx);
    worst = std::max({worst, nil.operator_defect_q, nil.operator_defect_qbar});
  }
  check(4, "squared charge operators annihilate every monomial of degree <= 3", worst, 1e-12);
}

void criterion_5_susy_tables() {
  ModelInstance model = build_1d();
  BracketContext ctx = model.context();
  const VarTablePtr& t = model.table;
  auto v = [&](const char* n) { return SuperPolynomial::variable(t, n); };
  double zeros = 0.0;
  double min_scalar = 1.0;
  auto scalars = [&](const SuperPolynomial& br, const SuperPolynomial& image) {
    auto c = match_up_to_scalar(br, image);
    min_scalar = std::min(min_scalar, scalar_or_fail(c));
  };

  {  // alpha family
    SuperchargePair p = build_supercharges_1d(kSqrt2, 0.0, t);
    zeros = std::max({zeros, gpb(v("P"), p.Q, ctx).max_abs_coeff(),
                      gpb(v("theta"), p.Q, ctx).max_abs_coeff(),
                      gpb(v("X"), p.Qbar, ctx).max_abs_coeff(),
                      gpb(v("pi"), p.Qbar, ctx).max_abs_coeff()});
    scalars(gpb(v("X"), p.Q, ctx), v("theta"));
    scalars(gpb(v("pi"), p.Q, ctx), v("P"));
    scalars(gpb(v("P"), p.Qbar, ctx), v("pi"));
    scalars(gpb(v("theta"), p.Qbar, ctx), v("X"));
  }
  {  // beta family
    SuperchargePair p = build_supercharges_1d(0.0, kSqrt2, t);
    zeros = std::max({zeros, gpb(v("X"), p.Q, ctx).max_abs_coeff(),
                      gpb(v("pi"), p.Q, ctx).max_abs_coeff(),
                      gpb(v("P"), p.Qbar, ctx).max_abs_coeff(),
                      gpb(v("theta"), p.Qbar, ctx).max_abs_coeff()});
    scalars(gpb(v("P"), p.Q, ctx), v("pi"));
    scalars(gpb(v("theta"), p.Q, ctx), v("X"));
    scalars(gpb(v("X"), p.Qbar, ctx), v("theta"));
    scalars(gpb(v("pi"), p.Qbar, ctx), v("P"));
  }
  {  // two-dimensional diagonal and cross tables
    ModelInstance m2 = build_2d();
    BracketContext ctx2 = m2.context();
    const Supercharges2d& ch = *m2.charges_2d;
    SuperPolynomial q = 0.5 * (ch.Q1 + ch.Q2), qbar = 0.5 * (ch.Qbar1 + ch.Qbar2);
    SuperPolynomial qp = 0.5 * (ch.Q1 - ch.Q2), qpbar = 0.5 * (ch.Qbar1 - ch.Qbar2);
    auto v2 = [&](const std::string& n) { return SuperPolynomial::variable(m2.table, n); };
    for (int j = 1; j <= 2; ++j) {
      const std::string js = std::to_string(j), ks = std::to_string(3 - j);
      zeros = std::max({zeros, gpb(v2("P" + js), q, ctx2).max_abs_coeff(),
                        gpb(v2("theta" + js), q, ctx2).max_abs_coeff(),
                        gpb(v2("X" + js), qbar, ctx2).max_abs_coeff(),
                        gpb(v2("pi" + js), qbar, ctx2).max_abs_coeff(),
                        gpb(v2("P" + js), qp, ctx2).max_abs_coeff(),
                        gpb(v2("theta" + js), qp, ctx2).max_abs_coeff()});
      scalars(gpb(v2("X" + js), q, ctx2), v2("theta" + js));
      scalars(gpb(v2("pi" + js), q, ctx2), v2("P" + js));
      scalars(gpb(v2("theta" + js), qbar, ctx2), v2("X" + js));
      scalars(gpb(v2("P" + js), qbar, ctx2), v2("pi" + js));
      scalars(gpb(v2("X" + js), qp, ctx2), v2("theta" + ks));
      scalars(gpb(v2("pi" + js), qp, ctx2), v2("P" + ks));
      scalars(gpb(v2("theta" + js), qpbar, ctx2), v2("X" + ks));
      scalars(gpb(v2("P" + js), qpbar, ctx2), v2("pi" + ks));
    }
  }
  bool ok = zeros <= 1e-12 && min_scalar > 1e-12;
  report_line(5, "supersymmetry transformation tables (1d and 2d patterns)", ok, zeros, 1e-12);
}

void criterion_6_first_integrals() {
  double worst = 0.0;
  int counts[3] = {0, 0, 0};
  for (int n : {1, 2, 3}) {
    ModelInstance model = build_nd(n);
    BracketContext ctx = model.context();
    counts[n - 1] = static_cast<int>(model.integrals.size());
    for (const auto& [name, integral] : model.integrals) {
      (void)name;
      worst = std::max(worst, gpb(integral, model.hamiltonian, ctx).max_abs_coeff());
    }
  }
  bool count_ok = counts[0] == 4 && counts[1] == 16 && counts[2] == 36;
  report_line(6, "4/16/36 first integrals conserved for n = 1/2/3",
              count_ok && worst <= 1e-12, worst, 1e-12);
}

void criterion_7_closure() {
  ModelInstance model = build_1d();
  BracketContext ctx = model.context();
  double defect = gpb(model.integrals.at("Z1"), model.integrals.at("Z2"), ctx).max_abs_coeff();
  auto c11 = match_up_to_scalar(gpb(model.integrals.at("Z1"), model.integrals.at("Z1"), ctx),
                                model.integrals.at("Z0"));
  auto c22 = match_up_to_scalar(gpb(model.integrals.at("Z2"), model.integrals.at("Z2"), ctx),
                                model.integrals.at("Z0"));
  bool scalars_ok = c11 && c22 && std::abs(*c11) > 1e-12 && std::abs(*c22) > 1e-12;

  ModelInstance m2 = build_2d();
  BracketContext ctx2 = m2.context();
  std::vector<SuperPolynomial> odd, even;
  for (const auto& [name, integral] : m2.integrals) {
    if (name[0] != 'C') continue;
    (parity_of(integral) == ParityClass::Odd ? odd : even).push_back(integral);
  }
  double residual = closure_check(odd, even, ctx2).max_residual;
  report_line(7, "closure: {Z1,Z2}=0, {Z1,Z1}~Z0~{Z2,Z2}, odd-odd brackets in even span",
              defect <= 1e-12 && scalars_ok && residual <= 1e-10,
              std::max(defect, residual), 1e-10);
}

void criterion_8_boson_fermion_maps() {
  ModelInstance model = build_1d();
  BracketContext ctx = model.context();
  const VarTablePtr& t = model.table;
  auto v = [&](const char* n) { return SuperPolynomial::variable(t, n); };
  SuperchargePair pair = build_supercharges_1d(kSqrt2, 0.0, t);
  auto m0 = match_up_to_scalar(
      map_boson_fermion(v("P") * v("X"), pair, ctx).fermionic_part, v("pi") * v("theta"));

  ModelInstance m2 = build_2d();
  BracketContext ctx2 = m2.context();
  const Supercharges2d& ch = *m2.charges_2d;
  SuperchargePair eff{0.5 * (ch.Q1 + ch.Q2), 0.5 * (ch.Qbar1 + ch.Qbar2), 1.0, 0.0};
  auto v2 = [&](const char* n) { return SuperPolynomial::variable(m2.table, n); };
  SuperPolynomial c1 = kI * (v2("P1") * v2("X2") + v2("P2") * v2("X1"));
  SuperPolynomial c13 = kI * (v2("pi1") * v2("theta2") + v2("pi2") * v2("theta1"));
  SuperPolynomial c2 = v2("P1") * v2("X2") - v2("P2") * v2("X1");
  SuperPolynomial c14 = v2("pi1") * v2("theta2") - v2("pi2") * v2("theta1");
  auto m1 = match_up_to_scalar(map_boson_fermion(c1, eff, ctx2).fermionic_part, c13);
  auto m2s = match_up_to_scalar(map_boson_fermion(c2, eff, ctx2).fermionic_part, c14);

  bool ok = m0 && m1 && m2s && std::abs(*m0) > 1e-12 && std::abs(*m1) > 1e-12 &&
            std::abs(*m2s) > 1e-12;
  report_line(8, "boson-fermion maps: PX -> pi theta, C1 -> C13, C2 -> C14", ok,
              ok ? 0.0 : 1.0, 1e-12);
}

void criterion_9_nambu() {
  ModelInstance model = build_1d();
  BracketContext ctx = model.context();
  std::array<int, 4> vars{model.table->index_of("P"), model.table->index_of("X"),
                          model.table->index_of("pi"), model.table->index_of("theta")};
  NambuSpec spec = make_nambu_spec({model.integrals.at("Z0"), model.integrals.at("Z3"),
                                    model.integrals.at("Z1")},
                                   model.integrals.at("Z2"), model.hamiltonian, vars, ctx);
  double worst = 0.0;
  for (const char* name : {"P", "X", "theta", "pi"})
    worst = std::max(worst, nambu_defect(SuperPolynomial::variable(model.table, name),
                                         model.hamiltonian, spec, ctx)
                                .max_abs_coeff());
  // the bracket dynamics it certifies: Pdot = -iP
  SuperPolynomial p = SuperPolynomial::variable(model.table, "P");
  worst = std::max(worst, (gpb(p, model.hamiltonian, ctx) + kI * p).max_abs_coeff());
  worst = std::max(worst, nambu_bracket_of_hamiltonians(
                              {model.integrals.at("Z0"), model.integrals.at("Z3"),
                               model.integrals.at("Z1"), model.integrals.at("Z2")},
                              spec, ctx)
                              .max_abs_coeff());
  bool alternative = false;
  for (const auto& alt : {std::array<const char*, 4>{"Z0", "Z1", "Z2", "Z3"},
                          std::array<const char*, 4>{"Z0", "Z3", "Z2", "Z1"}}) {
    try {
      NambuSpec alt_spec = make_nambu_spec(
          {model.integrals.at(alt[0]), model.integrals.at(alt[1]), model.integrals.at(alt[2])},
          model.integrals.at(alt[3]), model.hamiltonian, vars, ctx);
      double alt_worst = 0.0;
      for (const char* name : {"P", "X", "theta", "pi"})
        alt_worst = std::max(alt_worst,
                             nambu_defect(SuperPolynomial::variable(model.table, name),
                                          model.hamiltonian, alt_spec, ctx)
                                 .max_abs_coeff());
      if (alt_worst <= 1e-12) alternative = true;
    } catch (const std::domain_error&) {
    }
  }
  report_line(9, "four-bracket reproduces the dynamics; invariant bracket vanishes; "
                 "alternative triple validates",
              worst <= 1e-12 && alternative, worst, 1e-12);
}

void criterion_10_supercharge_algebra_2d() {
  ModelInstance model = build_2d();
  BracketContext ctx = model.context();
  const Supercharges2d& ch = *model.charges_2d;
  double worst = 0.0;
  for (const SuperPolynomial* a : {&ch.Q1, &ch.Q2})
    for (const SuperPolynomial* b : {&ch.Q1, &ch.Q2})
      worst = std::max(worst, gpb(*a, *b, ctx).max_abs_coeff());
  for (const SuperPolynomial* a : {&ch.Qbar1, &ch.Qbar2})
    for (const SuperPolynomial* b : {&ch.Qbar1, &ch.Qbar2})
      worst = std::max(worst, gpb(*a, *b, ctx).max_abs_coeff());
  Algebra2d algebra = supercharge_algebra_2d(ch, ctx);
  worst = std::max(worst, algebra.residual);
  worst = std::max(worst, gpb(algebra.h0, model.hamiltonian, ctx).max_abs_coeff());
  worst = std::max(worst, gpb(algebra.h1, model.hamiltonian, ctx).max_abs_coeff());
  auto c = match_up_to_scalar(algebra.h0, model.hamiltonian);
  bool prop = c && std::abs(*c) > 1e-12;
  std::mt19937 rng(107);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  bool phases_ok = true;
  for (int it = 0; it < 10; ++it) {
    RSymmetryReport rep = r_symmetry_check(ch, angle(rng), angle(rng), ctx);
    phases_ok = phases_ok && rep.ok;
  }
  report_line(10, "2d supercharge algebra with sigma0/sigma3 decomposition and R-symmetry",
              worst <= 1e-12 && prop && phases_ok, worst, 1e-12);
}

void criterion_11_pu_scheme1() {
  ModelInstance model = build_pu_scheme1(5.0, 2.0, 1.0);
  BracketContext ctx = model.context();
  double worst = verify_canonical(*model.to_complex, ctx).max_defect;
  for (const auto& [name, integral] : model.integrals) {
    (void)name;
    worst = std::max(worst, gpb(integral, model.hamiltonian, ctx).max_abs_coeff());
  }
  bool count_ok = model.integrals.size() == 8;
  PuDiagonalization d = pu_diagonalize(5.0, 2.0, 1.0);
  bool reconstruction_ok = d.reconstruction_error < 1e-10;
  PuDiagonalization simple = pu_diagonalize(4.0, 1.0, 0.0);
  bool frequencies_ok =
      std::abs(simple.a - 2.0) < 1e-12 && std::abs(simple.b - 1.0) < 1e-12;
  report_line(11, "first scheme: canonical composition, 8 conserved integrals, "
                  "matrix reconstruction, frequencies (2,1)",
              worst <= 1e-12 && count_ok && reconstruction_ok && frequencies_ok, worst, 1e-12);
}

void criterion_12_pu_scheme2() {
  double worst = 0.0;
  for (double a : {0.5, 1.0, 3.0}) {
    PuScheme2Report rep = build_pu_scheme2(a, 1.0);
    worst = std::max({worst, rep.bracket_defect, rep.product_defect, rep.cross_defect});
  }
  check(12, "second scheme: canonical tilde pairs with rescaled products, a in {0.5, 1, 3}",
        worst, 1e-12);
}

void criterion_13_isotonic() {
  std::mt19937 rng(109);
  std::uniform_real_distribution<double> rs(0.2, 3.0), ps(-3.0, 3.0);
  std::vector<std::pair<double, double>> samples;
  for (int s = 0; s < 20; ++s) samples.emplace_back(rs(rng), ps(rng));
  double worst = isotonic_identity_error(2.0, 1.5, 0.8, samples);

  ModelInstance model = build_isotonic(4.0, 2.0, 1.0);  // omega = 2
  BracketContext ctx = model.context();
  worst = std::max(worst, verify_canonical(*model.to_complex, ctx).max_defect);
  worst = std::max(worst,
                   (model.to_complex->apply(*model.base_hamiltonian) - model.hamiltonian)
                       .max_abs_coeff());
  for (const auto& [name, integral] : model.integrals) {
    (void)name;
    worst = std::max(worst, gpb(integral, model.hamiltonian, ctx).max_abs_coeff());
  }
  Algebra2d algebra = supercharge_algebra_2d(*model.charges_2d, ctx);
  worst = std::max(worst, algebra.residual);
  auto c = match_up_to_scalar(algebra.h0, model.hamiltonian);
  report_line(13, "isotonic: central-force identity (a=k, b=l^2/2m) and the lifted battery",
              worst <= 1e-12 && c && std::abs(*c) > 1e-12, worst, 1e-12);
}

void criterion_14_dynamics() {
  ModelInstance model = build_1d();
  BracketContext ctx = model.context();
  EvolutionMatrix ev = linearize(model.hamiltonian, ctx);
  double worst = 0.0;
  std::vector<double> grid;
  for (int k = 0; k <= 62; ++k) grid.push_back(0.1 * k);
  for (double t : {0.3, 1.7, 4.4, 2.0 * std::numbers::pi})
    worst = std::max(worst, verify_canonical(evolve_map(ev, t), ctx).max_defect);
  for (const auto& [name, integral] : model.integrals) {
    (void)name;
    worst = std::max(worst, conservation_over_time(integral, ev, grid));
  }
  const SuperchargePair& pair = model.sector_charges.front();
  worst = std::max(worst, conservation_over_time(pair.Q, ev, grid));
  worst = std::max(worst, conservation_over_time(pair.Qbar, ev, grid));
  worst = std::max(worst, (matrix_exp(ev.L * 2.0 * std::numbers::pi) -
                           Eigen::MatrixXcd::Identity(4, 4))
                              .cwiseAbs()
                              .maxCoeff());
  check(14, "exact flow: canonical, conserving, periodic over [0, 2 pi]", worst, 1e-10);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ast::NodePtr random_tree(std::mt19937& rng, int depth) {
  auto node = [](ast::Kind k) {
    auto n = std::make_unique<ast::Node>();
    n->kind = k;
    return n;
  };
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 3 : 8);
  static const char* names[] = {"q", "p", "theta", "pi", "X", "P", "q2", "pi1"};
  switch (pick(rng)) {
    case 0: {
      auto n = node(ast::Kind::Number);
      n->number = std::uniform_int_distribution<int>(0, 99)(rng) / 8.0;
      return n;
    }
    case 1: return node(ast::Kind::Imaginary);
    case 2: return node(ast::Kind::PiConstant);
    case 3: {
      auto n = node(ast::Kind::Variable);
      n->name = names[std::uniform_int_distribution<int>(0, 7)(rng)];
      return n;
    }
    case 4: {
      auto n = node(ast::Kind::Negate);
      n->lhs = random_tree(rng, depth - 1);
      return n;
    }
    case 5:
    case 6: {
      auto n = node(std::uniform_int_distribution<int>(0, 1)(rng) ? ast::Kind::Add
                                                                  : ast::Kind::Subtract);
      n->lhs = random_tree(rng, depth - 1);
      n->rhs = random_tree(rng, depth - 1);
      return n;
    }
    case 7: {
      auto n = node(ast::Kind::Multiply);
      n->lhs = random_tree(rng, depth - 1);
      n->rhs = random_tree(rng, depth - 1);
      return n;
    }
    default: {
      auto n = node(ast::Kind::Power);
      auto base = node(ast::Kind::Variable);
      base->name = names[std::uniform_int_distribution<int>(0, 7)(rng)];
      n->lhs = std::move(base);
      n->exponent = std::uniform_int_distribution<int>(0, 4)(rng);
      return n;
    }
  }
}

void criterion_15_parser_and_cli(const std::string& cli) {
  std::mt19937 rng(113);
  bool round_trip = true;
  for (int it = 0; it < 500; ++it) {
    ast::NodePtr tree = random_tree(rng, 4);
    std::string once = print_expression(*tree);
    try {
      if (print_expression(*parse_expression(once)) != once) round_trip = false;
    } catch (const ParseError&) {
      round_trip = false;
    }
  }
  bool cli_ok = true;
  std::string why;
  if (cli.empty()) {
    cli_ok = false;
    why = "no CLI path given";
  } else {
    auto run = [&](const std::string& args) {
      const std::string cmd = "\"" + cli + "\" " + args + " >/dev/null 2>&1";
      const int rc = std::system(cmd.c_str());
      return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    };
    if (run("verify --model 1d --suite all --json acceptance_report_a.json") != 0) {
      cli_ok = false;
      why = "verify 1d/all exit code";
    }
    if (cli_ok && run("verify --model 1d --suite all --json acceptance_report_b.json") != 0) {
      cli_ok = false;
      why = "second verify exit code";
    }
    if (cli_ok) {
      nlohmann::json a = nlohmann::json::parse(slurp("acceptance_report_a.json"));
      nlohmann::json b = nlohmann::json::parse(slurp("acceptance_report_b.json"));
      std::string schema_why;
      if (!validate_report_json(a, &schema_why)) {
        cli_ok = false;
        why = "schema: " + schema_why;
      } else {
        a.erase("timestamp");
        b.erase("timestamp");
        if (a.dump() != b.dump()) {
          cli_ok = false;
          why = "reports differ between runs";
        }
      }
    }
    if (cli_ok && run("verify --model 1d --suite bogus") != 2) {
      cli_ok = false;
      why = "unknown suite should exit 2";
    }
    if (cli_ok && run("verify --model nosuch --suite all") != 2) {
      cli_ok = false;
      why = "unknown model should exit 2";
    }
    if (cli_ok) {
      std::ofstream cfg("acceptance_bad_pu.cfg");
      cfg << "mu1 = 1\nmu2 = 1\nrho = 2\n";
      cfg.close();
      if (run("verify --model pu1 --suite integrals --config acceptance_bad_pu.cfg") != 1) {
        cli_ok = false;
        why = "indefinite potential matrix should exit 1";
      }
    }
  }
  report_line(15, "parser round-trip and CLI verify/report behavior" +
                      (why.empty() ? std::string() : " [" + why + "]"),
              round_trip && cli_ok, round_trip && cli_ok ? 0.0 : 1.0, 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  criterion_1_canonical_tables();
  criterion_2_jacobi();
  criterion_3_supercharge_algebra_1d();
  criterion_4_nilpotency();
  criterion_5_susy_tables();
  criterion_6_first_integrals();
  criterion_7_closure();
  criterion_8_boson_fermion_maps();
  criterion_9_nambu();
  criterion_10_supercharge_algebra_2d();
  criterion_11_pu_scheme1();
  criterion_12_pu_scheme2();
  criterion_13_isotonic();
  criterion_14_dynamics();
  criterion_15_parser_and_cli(cli);
  if (g_failures == 0) {
    std::cout << "acceptance: all 15 criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criterion(s) failed\n";
  return 1;
}
