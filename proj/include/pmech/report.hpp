#ifndef PMECH_REPORT_HPP
#define PMECH_REPORT_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace pmech {

struct CheckResult {
  enum class Status { Pass, Fail, Error };
  std::string name;
  Status status = Status::Pass;
  double max_abs_defect = 0.0;
  std::string details;
};

/// Machine-readable verification report with stable key order; every numeric
/// defect is present even on pass.
struct Report {
  std::string model;
  std::string suite;
  std::map<std::string, double> tolerances;
  std::string determinant_order;  // "n/a" unless the four-bracket ran
  std::vector<CheckResult> checks;
  std::string timestamp;

  bool all_pass() const;
  nlohmann::ordered_json to_json() const;
};

std::string to_string(CheckResult::Status status);

/// Structural validation of an emitted report document.
bool validate_report_json(const nlohmann::json& doc, std::string* why = nullptr);

}  // namespace pmech

#endif
