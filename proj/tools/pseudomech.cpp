// Command-line front end: expression brackets, model inspection, verification
// suites with JSON reports, exact time evolution and the four-bracket.

#include <fstream>
#include <iostream>
#include <numbers>

#include <CLI11.hpp>

#include "pmech/dynamics.hpp"
#include "pmech/models.hpp"
#include "pmech/nambu.hpp"
#include "pmech/parser.hpp"
#include "pmech/suites.hpp"

namespace {

using namespace pmech;

ModelInstance make_model(const std::string& name, const SuiteConfig& cfg) {
  if (name == "1d") return build_1d();
  if (name == "2d") return build_2d();
  if (name == "pu1") return build_pu_scheme1(cfg.mu1, cfg.mu2, cfg.rho);
  if (name == "isotonic") return build_isotonic(cfg.k, cfg.l, cfg.m);
  if (name == "nn") return build_nd(cfg.n);
  if (name.size() > 2 && name.rfind("nn", 0) == 0) return build_nd(std::stoi(name.substr(2)));
  if (name == "pu2")
    throw UsageError("model pu2 is reachable through `verify --model pu2`");
  throw UsageError("unknown model: " + name);
}

VarTablePtr pick_basis(const ModelInstance& model, const std::string& basis) {
  if (basis == "XP") return model.table;
  if (basis == "qp") {
    if (!model.base_table) throw UsageError("model has no base-coordinate table");
    return model.base_table;
  }
  throw UsageError("unknown basis: " + basis + " (expected qp or XP)");
}

SuiteConfig load_config_file(const std::string& path) {
  if (path.empty()) return {};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file: " + path);
  return load_config(in);
}

int emit_report(const Report& report, const std::string& json_path) {
  for (const auto& check : report.checks)
    std::cout << (check.status == CheckResult::Status::Pass ? "PASS" : "FAIL") << "  "
              << check.name << "  (max defect " << check.max_abs_defect << ")"
              << (check.details.empty() ? "" : "  -- " + check.details) << "\n";
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw UsageError("cannot write JSON report: " + json_path);
    out << report.to_json().dump(2) << "\n";
  }
  std::cout << (report.all_pass() ? "all checks passed" : "CHECK FAILURES") << "\n";
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded phase-space algebra for supersymmetric oscillator models"};
  app.require_subcommand(1);

  std::string model_name = "1d", basis = "XP", config_path, json_path, suite = "all";
  std::string expr_a, expr_b, observable;
  double tol = -1.0, evolve_time = 0.0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--model", model_name, "model: 1d, 2d, pu1, pu2, isotonic, nn[<k>]");
    cmd->add_option("--config", config_path, "key=value config file");
    cmd->add_option("--tol", tol, "identity tolerance override");
  };

  CLI::App* bracket_cmd = app.add_subcommand("bracket", "generalized bracket of two expressions");
  bracket_cmd->add_option("lhs", expr_a, "first expression")->required();
  bracket_cmd->add_option("rhs", expr_b, "second expression")->required();
  bracket_cmd->add_option("--basis", basis, "variable basis: qp or XP");
  add_common(bracket_cmd);

  CLI::App* integrals_cmd = app.add_subcommand("integrals", "list named first integrals");
  add_common(integrals_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", suite,
                         "canonical, integrals, supercharges, nambu, dynamics, all");
  verify_cmd->add_option("--json", json_path, "write the JSON report here");
  add_common(verify_cmd);

  CLI::App* evolve_cmd = app.add_subcommand("evolve", "exact time evolution of an observable");
  evolve_cmd->add_option("--t", evolve_time, "evolution time")->required();
  evolve_cmd->add_option("--observable", observable, "expression to evolve")->required();
  add_common(evolve_cmd);

  CLI::App* nambu_cmd = app.add_subcommand("nambu", "four-bracket data for an expression");
  nambu_cmd->add_option("--f", observable, "expression for the first row")->required();
  add_common(nambu_cmd);

  try {
    app.parse(argc, argv);

    SuiteConfig cfg = load_config_file(config_path);
    if (tol > 0.0) cfg.tol = tol;

    if (app.got_subcommand(bracket_cmd)) {
      ModelInstance model = make_model(model_name, cfg);
      VarTablePtr table = pick_basis(model, basis);
      BracketContext ctx{table, cfg.tol};
      SuperPolynomial f = parse_polynomial(expr_a, table);
      SuperPolynomial g = parse_polynomial(expr_b, table);
      std::cout << gpb(f, g, ctx).str() << "\n";
      return 0;
    }

    if (app.got_subcommand(integrals_cmd)) {
      ModelInstance model = make_model(model_name, cfg);
      BracketContext ctx = model.context(cfg.tol);
      for (const auto& [name, integral] : model.integrals) {
        const double defect = gpb(integral, model.hamiltonian, ctx).max_abs_coeff();
        std::cout << name << " = " << integral.str() << "   (|{I,H}| = " << defect << ")\n";
      }
      return 0;
    }

    if (app.got_subcommand(verify_cmd)) {
      Report report = run_suite(model_name, suite, cfg);
      return emit_report(report, json_path);
    }

    if (app.got_subcommand(evolve_cmd)) {
      ModelInstance model = make_model(model_name, cfg);
      BracketContext ctx = model.context(cfg.tol);
      SuperPolynomial f = parse_polynomial(observable, model.table);
      EvolutionMatrix ev = linearize(model.hamiltonian, ctx);
      SuperPolynomial evolved = substitute(f, evolve_map(ev, evolve_time));
      std::cout << evolved.str() << "\n";
      std::cout << "drift from t=0: " << (evolved - f).max_abs_coeff() << "\n";
      return 0;
    }

    if (app.got_subcommand(nambu_cmd)) {
      if (model_name != "1d") throw UsageError("the nambu command is defined for model 1d only");
      ModelInstance model = make_model(model_name, cfg);
      BracketContext ctx = model.context(cfg.tol);
      std::array<int, 4> vars{model.table->index_of("P"), model.table->index_of("X"),
                              model.table->index_of("pi"), model.table->index_of("theta")};
      NambuSpec spec = make_nambu_spec({model.integrals.at("Z0"), model.integrals.at("Z3"),
                                        model.integrals.at("Z1")},
                                       model.integrals.at("Z2"), model.hamiltonian, vars, ctx);
      SuperPolynomial f = parse_polynomial(observable, model.table);
      SuperPolynomial j = graded_jacobian(f, spec, ctx);
      SuperPolynomial defect = nambu_defect(f, model.hamiltonian, spec, ctx);
      std::cout << "determinant order: " << to_string(spec.order) << "\n";
      std::cout << "normalization: " << format_complex(spec.normalization) << "\n";
      std::cout << "jacobian: " << j.str() << "\n";
      std::cout << "defect vs bracket dynamics: " << defect.max_abs_coeff() << "\n";
      QuotientResult q = exact_quotient(j, 2.0 * model.integrals.at("Z2"));
      if (q.quotient)
        std::cout << "J / (2 Z2) = " << q.quotient->str()
                  << (q.status == QuotientResult::Status::Ambiguous ? "  (ambiguous)" : "")
                  << "\n";
      else
        std::cout << "J / (2 Z2): no exact quotient (residual " << q.residual << ")\n";
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "expression error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
