#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "avoidable/walk.hpp"

namespace avoidable {

/// Outcome of checking one claim on one instance. Failed reports always
/// carry at least one witness walk or an explanatory detail.
struct VerificationReport {
  std::string claim;
  std::string instance;
  bool passed = false;
  std::vector<Walk> witness;
  std::string detail;
  std::optional<std::size_t> failed_index;
  double seconds = 0.0;
  std::size_t budget_used = 0;
};

inline std::string to_text(const VerificationReport& r) {
  std::string s = (r.passed ? "PASS " : "FAIL ") + r.claim + " [" + r.instance + "]";
  if (!r.detail.empty()) s += " " + r.detail;
  if (!r.passed && !r.witness.empty()) s += " witness=" + to_string(r.witness.front());
  return s;
}

/// Wall-clock stopwatch for report timings.
class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace avoidable
