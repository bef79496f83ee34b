#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace finalg {

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus s);

/// Outcome of one verification check. `witnesses` holds one JSON object per
/// case, in case order; entries with "informational": true never affect status.
struct CheckReport {
  std::string check_name;
  CheckStatus status = CheckStatus::Skipped;
  std::uint64_t cases_total = 0;
  std::uint64_t cases_examined = 0;
  double wall_time_ms = 0;
  nlohmann::json witnesses = nlohmann::json::array();

  bool passed() const noexcept { return status == CheckStatus::Pass; }
};

/// { check_name, status, cases_total, cases_examined, wall_time_ms, witnesses };
/// wall_time_ms is omitted when timing is false.
nlohmann::json to_json(const CheckReport& r, bool timing = true);

struct SuiteReport {
  std::vector<CheckReport> checks;
  bool passed() const;
};

/// { checks: [...], status }
nlohmann::json to_json(const SuiteReport& s, bool timing = true);

/// Measures wall time from construction.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace finalg
