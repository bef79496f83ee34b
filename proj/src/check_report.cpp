#include "finalg/check_report.hpp"

#include <algorithm>

namespace finalg {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

nlohmann::json to_json(const CheckReport& r, bool timing) {
  nlohmann::json out = nlohmann::json::object();
  out["check_name"] = r.check_name;
  out["status"] = to_string(r.status);
  out["cases_total"] = r.cases_total;
  out["cases_examined"] = r.cases_examined;
  if (timing) out["wall_time_ms"] = r.wall_time_ms;
  out["witnesses"] = r.witnesses;
  return out;
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.passed(); });
}

nlohmann::json to_json(const SuiteReport& s, bool timing) {
  nlohmann::json out = nlohmann::json::object();
  out["checks"] = nlohmann::json::array();
  for (const auto& c : s.checks) out["checks"].push_back(to_json(c, timing));
  out["status"] = s.passed() ? "pass" : "fail";
  return out;
}

}  // namespace finalg
