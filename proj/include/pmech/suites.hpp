#ifndef PMECH_SUITES_HPP
#define PMECH_SUITES_HPP

#include <istream>
#include <stdexcept>
#include <string>

#include "pmech/report.hpp"

namespace pmech {

/// Bad model/suite names or unsupported combinations; the CLI maps this to
/// exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SuiteConfig {
  double tol = 1e-12;          // identity checks
  double dyn_tol = 1e-10;      // dynamical conservation
  double closure_tol = 1e-10;  // span residuals
  double mu1 = 5.0, mu2 = 2.0, rho = 1.0;
  double pu2_a = 3.0, pu2_b = 2.0;
  double k = 1.0, l = 2.0, m = 1.0;
  int n = 3;
  unsigned seed = 20240817;
};

/// key=value lines, '#' comments. Unknown keys are rejected.
SuiteConfig load_config(std::istream& in);

/// Runs the named verification suite for the named model.
/// Models: 1d, 2d, pu1, pu2, isotonic, nn (or nn<k>).
/// Suites: canonical, integrals, supercharges, nambu, dynamics, all.
Report run_suite(const std::string& model, const std::string& suite, const SuiteConfig& config);

}  // namespace pmech

#endif
