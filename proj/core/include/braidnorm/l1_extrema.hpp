#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidnorm/report.hpp"

namespace braidnorm {

enum class ExtremumKind { Max, Min };

struct Extremum {
  double theta = 0.0;
  double value = 0.0;
  ExtremumKind kind = ExtremumKind::Max;
};

struct L1Profile {
  int two_j = 1;
  int two_m = 1;
  std::vector<double> thetas;
  std::vector<double> values;
  std::vector<Extremum> extrema;  // sorted by theta
};

inline constexpr int kDefaultSamples = 10001;
inline constexpr double kCanonicalTol = 1e-6;

// f(theta) = sum over M' of |d^J_{MM'}(theta)|
double l1_value(int two_j, int two_m, double theta);

// Uniform grid theta_i = pi (2i - (n-1))/(n-1), so 0 and +-pi are exact
// samples and the grid is mirror symmetric. n must be odd and >= 101.
L1Profile l1_profile(int two_j, int two_m, int n_samples = kDefaultSamples);

// Located extremum nearest to theta, if one lies within tol.
std::optional<Extremum> extremum_near(const L1Profile& p, double theta, double tol = kCanonicalTol);

struct RowCanonical {
  int two_m = 0;
  // Largest distance from one of -pi, -pi/2, 0, pi/2, pi to its nearest extremum.
  double worst_distance = 0.0;
  std::optional<ExtremumKind> at_half_pi;
  std::optional<ExtremumKind> at_pi;
};

std::vector<RowCanonical> canonical_rows(int two_j, int n_samples = kDefaultSamples);
// One check per row; failures are reported, never thrown.
Report canonical_extrema_check(int two_j, int n_samples = kDefaultSamples);

enum class Signature { SpinorLike, VectorLike, Mixed };

// SpinorLike: every row has a maximum at +-pi/2. VectorLike: some row has a
// minimum there. Mixed covers anything else.
Signature spinor_vector_signature(int two_j, int n_samples = kDefaultSamples);

std::string to_string(ExtremumKind k);
std::string to_string(Signature s);
// "3/2", "-1", ...
std::string half_int_string(int twice);

}  // namespace braidnorm
