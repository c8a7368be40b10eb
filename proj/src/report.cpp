#include "pmech/report.hpp"

namespace pmech {

std::string to_string(CheckResult::Status status) {
  switch (status) {
    case CheckResult::Status::Pass: return "pass";
    case CheckResult::Status::Fail: return "fail";
    case CheckResult::Status::Error: return "error";
  }
  return "error";
}

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (c.status != CheckResult::Status::Pass) return false;
  return true;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json doc;
  doc["model"] = model;
  doc["suite"] = suite;
  doc["tolerances"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : tolerances) doc["tolerances"][k] = v;
  doc["determinant_order"] = determinant_order.empty() ? "n/a" : determinant_order;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    entry["status"] = to_string(c.status);
    entry["max_abs_defect"] = c.max_abs_defect;
    entry["details"] = c.details;
    doc["checks"].push_back(std::move(entry));
  }
  doc["timestamp"] = timestamp;
  return doc;
}

bool validate_report_json(const nlohmann::json& doc, std::string* why) {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  if (!doc.is_object()) return fail("document is not an object");
  for (const char* key : {"model", "suite", "tolerances", "determinant_order", "checks",
                          "timestamp"})
    if (!doc.contains(key)) return fail(std::string("missing key: ") + key);
  if (!doc["model"].is_string() || !doc["suite"].is_string() ||
      !doc["determinant_order"].is_string() || !doc["timestamp"].is_string())
    return fail("string field has wrong type");
  if (!doc["tolerances"].is_object()) return fail("tolerances must be an object");
  for (const auto& [k, v] : doc["tolerances"].items()) {
    (void)k;
    if (!v.is_number()) return fail("tolerance values must be numbers");
  }
  if (!doc["checks"].is_array()) return fail("checks must be an array");
  for (const auto& entry : doc["checks"]) {
    if (!entry.is_object()) return fail("check entry must be an object");
    for (const char* key : {"name", "status", "max_abs_defect", "details"})
      if (!entry.contains(key)) return fail(std::string("check entry missing key: ") + key);
    if (!entry["name"].is_string() || !entry["details"].is_string())
      return fail("check entry string field has wrong type");
    if (!entry["status"].is_string()) return fail("status must be a string");
    const std::string s = entry["status"].get<std::string>();
    if (s != "pass" && s != "fail" && s != "error") return fail("invalid status value: " + s);
    if (!entry["max_abs_defect"].is_number()) return fail("max_abs_defect must be a number");
  }
  return true;
}

}  // namespace pmech
