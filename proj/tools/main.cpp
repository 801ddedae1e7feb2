#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "braidnorm/commands.hpp"
#include "braidnorm/errors.hpp"

namespace {

constexpr int kUsage = 2;

// "3/2", "-1/2", "1", "0.5" -> twice the value
int parse_half_int(const std::string& s) {
  std::size_t used = 0;
  const auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      const int num = std::stoi(s.substr(0, slash), &used);
      if (used != slash || s.substr(slash + 1) != "2") throw std::invalid_argument(s);
      return num;
    }
    const double v = std::stod(s, &used);
    if (used != s.size() || v * 2 != static_cast<int>(v * 2)) throw std::invalid_argument(s);
    return static_cast<int>(v * 2);
  } catch (const std::logic_error&) {
    throw braidnorm::UsageError("not a half-integer: '" + s + "'");
  }
}

braidnorm::BrmTag parse_type(const std::string& s) {
  if (s == "I") return braidnorm::BrmTag::TypeI;
  if (s == "II") return braidnorm::BrmTag::TypeII;
  throw braidnorm::UsageError("--type must be I or II, got '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid relation matrices from Wigner D-function extrema"};
  app.set_version_flag("--version", std::string(braidnorm::kVersion));
  app.require_subcommand(1);

  std::optional<std::string> filter;
  std::uint64_t seed = braidnorm::kDefaultSeed;
  auto* verify = app.add_subcommand("verify", "Run the registered invariant checks and print a JSON report");
  verify->add_option("--filter", filter, "Substring matched against check names");
  verify->add_option("--seed", seed, "Seed for sampled checks");

  int two_j = 1, samples = 10001;
  std::string row = "1/2", out;
  auto* scan = app.add_subcommand("scan-l1", "Write theta,f samples of a row l1-norm as CSV");
  scan->add_option("--two-j", two_j, "2J")->required();
  scan->add_option("--row", row, "Row label M, e.g. 1/2, -1, 0")->required();
  scan->add_option("--samples", samples, "Odd sample count >= 101");
  scan->add_option("--out", out, "Output CSV path")->required();

  std::string type = "I";
  auto* derive = app.add_subcommand("derive-brm", "Run the canonical BRM derivation and write JSON");
  derive->add_option("--two-j", two_j, "2J in {1, 2, 3}")->required();
  derive->add_option("--type", type, "I or II")->required();
  derive->add_option("--out", out, "Output JSON path")->required();

  std::string family;
  int grid = 20;
  auto* ybe = app.add_subcommand("ybe-check", "Scan a spectral family over a grid and print a JSON report");
  ybe->add_option("--family", family, "r4-type1, r4-type2, 2d-type1 or 2d-type2")->required();
  ybe->add_option("--grid", grid, "Grid size per axis");

  auto* figures = app.add_subcommand("figures", "Write the five l1-norm curves as CSV files");
  figures->add_option("--out", out, "Output directory")->required();
  figures->add_option("--samples", samples, "Odd sample count >= 101");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*verify) {
      const braidnorm::Report r = braidnorm::cmd_verify(filter, seed);
      std::cout << braidnorm::to_json(r) << '\n';
      return braidnorm::exit_code(r);
    }
    if (*scan) {
      braidnorm::cmd_scan_l1(two_j, parse_half_int(row), samples, out);
      std::cout << out << '\n';
      return 0;
    }
    if (*derive) {
      braidnorm::cmd_derive_brm(two_j, parse_type(type), out);
      std::cout << out << '\n';
      return 0;
    }
    if (*ybe) {
      const braidnorm::Report r = braidnorm::cmd_ybe_check(family, grid);
      std::cout << braidnorm::to_json(r) << '\n';
      return braidnorm::exit_code(r);
    }
    if (*figures) {
      for (const std::string& p : braidnorm::cmd_figures(out, samples)) std::cout << p << '\n';
      return 0;
    }
  } catch (const braidnorm::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
