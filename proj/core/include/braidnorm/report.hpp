#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace braidnorm {

inline constexpr const char* kVersion = "0.1.0";

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string version = kVersion;
  std::vector<CheckResult> checks;
  int passed = 0;
  int failed = 0;
  std::int64_t wall_time_ms = 0;
};

// pass = residual <= tolerance; a NaN residual fails.
CheckResult make_check(std::string name, double residual, double tolerance, std::string detail = {});

// Sorts checks by name and recounts passed/failed.
void finalize(Report& r);

std::string to_json(const Report& r, int indent = 2);

}  // namespace braidnorm
