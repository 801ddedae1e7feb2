#include "braidnorm/commands.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "braidnorm/errors.hpp"
#include "braidnorm/l1_extrema.hpp"
#include "braidnorm/wigner.hpp"
#include "json.hpp"

namespace braidnorm {

namespace {

using ojson = nlohmann::ordered_json;

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

ojson complex_json(cplx z) { return ojson::array({z.real(), z.imag()}); }

ojson matrix_json(const CMatrix& m) {
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.close();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace

Report cmd_verify(const std::optional<std::string>& filter, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  for (const RegisteredCheck& c : check_registry()) {
    if (filter && c.name.find(*filter) == std::string::npos) continue;
    r.checks.push_back(run_check(c, seed));
  }
  finalize(r);
  r.wall_time_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string scan_l1_csv(int two_j, int two_m, int samples) {
  const L1Profile p = l1_profile(two_j, two_m, samples);
  std::string out = "theta,f\n";
  out.reserve(out.size() + p.thetas.size() * 44);
  for (std::size_t i = 0; i < p.thetas.size(); ++i) {
    out += fmt17(p.thetas[i]);
    out += ',';
    out += fmt17(p.values[i]);
    out += '\n';
  }
  return out;
}

void cmd_scan_l1(int two_j, int two_m, int samples, const std::string& out_path) {
  write_file(out_path, scan_l1_csv(two_j, two_m, samples));
}

std::string derive_brm_json(int two_j, BrmTag tag) {
  const DerivedBrm d = canonical_brm(two_j, tag);
  ojson j;
  j["two_j"] = two_j;
  j["type"] = to_string(tag);
  j["theta_star"] = d.brm_type.theta_star;
  j["phi_star"] = d.brm_type.phi_star;
  j["A"] = matrix_json(d.a);
  j["B"] = matrix_json(d.b);
  j["conjugator"] = matrix_json(d.conjugator);
  j["convention"] = d.convention == Convention::UXUdag ? "U X U^dagger" : "U^dagger X U";
  j["A_tilde"] = matrix_json(d.a_tilde);
  j["B_tilde"] = matrix_json(d.b_tilde);
  j["braid_residual"] = d.braid_residual;
  j["paper_match_residual"] = d.paper_match_residual;
  j["mirror_branch_residual"] = d.mirror_branch_residual;
  j["overall_phase"] = complex_json(d.overall_phase);
  return j.dump(2) + "\n";
}

void cmd_derive_brm(int two_j, BrmTag tag, const std::string& out_path) {
  write_file(out_path, derive_brm_json(two_j, tag));
}

Report cmd_ybe_check(const std::string& family, int grid) {
  const auto t0 = std::chrono::steady_clock::now();
  const double tol = family == "r4-type2" ? 1e-12 : 1e-10;
  const double w = ybe_grid_residual(family, grid);
  Report r;
  r.checks.push_back(make_check("ybe." + family, w, tol,
                                "max over " + std::to_string(grid) + "x" + std::to_string(grid) + " grid"));
  finalize(r);
  r.wall_time_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

const std::vector<FigureSpec>& figure_specs() {
  static const std::vector<FigureSpec> specs{
      {"fig1_2j1_2m1.csv", 1, 1},  {"fig2_2j2_2m2.csv", 2, 2}, {"fig3_2j2_2m0.csv", 2, 0},
      {"fig4_2j3_2m3.csv", 3, 3}, {"fig5_2j3_2m1.csv", 3, 1},
  };
  return specs;
}

std::vector<std::string> cmd_figures(const std::string& out_dir, int samples) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create directory '" + out_dir + "': " + ec.message());
  std::vector<std::string> paths;
  for (const FigureSpec& f : figure_specs()) {
    const std::string path = (std::filesystem::path(out_dir) / f.file).string();
    cmd_scan_l1(f.two_j, f.two_m, samples, path);
    paths.push_back(path);
  }
  return paths;
}

int exit_code(const Report& r) { return r.failed == 0 ? 0 : 1; }

}  // namespace braidnorm
