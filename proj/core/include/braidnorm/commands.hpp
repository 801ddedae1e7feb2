#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braidnorm/brm_pipeline.hpp"
#include "braidnorm/checks.hpp"
#include "braidnorm/report.hpp"

namespace braidnorm {

// Runs every registered check whose name contains filter (all if empty).
Report cmd_verify(const std::optional<std::string>& filter, std::uint64_t seed = kDefaultSeed);

// "theta,f" header then one line per grid sample, 17 significant digits.
std::string scan_l1_csv(int two_j, int two_m, int samples);
void cmd_scan_l1(int two_j, int two_m, int samples, const std::string& out_path);

std::string derive_brm_json(int two_j, BrmTag tag);
void cmd_derive_brm(int two_j, BrmTag tag, const std::string& out_path);

// One check per family holding the max residual of the grid scan.
Report cmd_ybe_check(const std::string& family, int grid);

struct FigureSpec {
  std::string file;
  int two_j;
  int two_m;
};
const std::vector<FigureSpec>& figure_specs();
// Writes the five curve CSVs into out_dir (created if missing); returns paths.
std::vector<std::string> cmd_figures(const std::string& out_dir, int samples = 10001);

// 0 when nothing failed, 1 otherwise.
int exit_code(const Report& r);

}  // namespace braidnorm
