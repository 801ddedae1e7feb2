#include "braidnorm/report.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

namespace braidnorm {

CheckResult make_check(std::string name, double residual, double tolerance, std::string detail) {
  const bool pass = !std::isnan(residual) && residual <= tolerance;
  return {std::move(name), residual, tolerance, pass, std::move(detail)};
}

void finalize(Report& r) {
  std::stable_sort(r.checks.begin(), r.checks.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  r.passed = static_cast<int>(std::count_if(r.checks.begin(), r.checks.end(), [](const auto& c) { return c.pass; }));
  r.failed = static_cast<int>(r.checks.size()) - r.passed;
}

std::string to_json(const Report& r, int indent) {
  nlohmann::ordered_json j;
  j["version"] = r.version;
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  j["wall_time_ms"] = r.wall_time_ms;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["residual"] = c.residual;
    e["tolerance"] = c.tolerance;
    e["pass"] = c.pass;
    e["detail"] = c.detail;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  return j.dump(indent);
}

}  // namespace braidnorm
