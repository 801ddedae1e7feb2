#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "braidnorm/report.hpp"

namespace braidnorm {

inline constexpr std::uint64_t kDefaultSeed = 20110317;

struct Outcome {
  double residual = 0.0;
  std::string detail;
};

struct RegisteredCheck {
  std::string name;
  double tolerance = 0.0;
  std::function<Outcome(std::uint64_t seed)> run;
};

// Every invariant check, in registration order. Names are stable and are
// what the verify filter matches against.
const std::vector<RegisteredCheck>& check_registry();

// Runs one check; an exception becomes a failed result with NaN residual.
CheckResult run_check(const RegisteredCheck& c, std::uint64_t seed);

// Max residual over a grid x grid scan of a named family:
// r4-type1, r4-type2, 2d-type1, 2d-type2. Throws UsageError otherwise.
double ybe_grid_residual(const std::string& family, int grid);
std::vector<std::string> ybe_family_names();

}  // namespace braidnorm
