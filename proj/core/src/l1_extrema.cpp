#include "braidnorm/l1_extrema.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "braidnorm/errors.hpp"
#include "braidnorm/wigner.hpp"

namespace braidnorm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRefineTol = 1e-9;
constexpr double kMergeTol = 1e-7;

bool better(double a, double b, ExtremumKind k) { return k == ExtremumKind::Max ? a > b : a < b; }

// Golden-section search on [a, b]. The seed sample takes part in the final
// comparison, so an extremum sitting exactly on a grid point (0, +-pi) is
// returned exactly.
Extremum refine(const LittleDRow& row, double a, double b, ExtremumKind kind, double seed) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  Extremum best{seed, row.l1(seed), kind};
  auto consider = [&](double t, double f) {
    if (better(f, best.value, kind)) best = {t, f, kind};
  };
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = row.l1(x1), f2 = row.l1(x2);
  consider(x1, f1);
  consider(x2, f2);
  while (b - a > kRefineTol) {
    if (better(f1, f2, kind)) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = row.l1(x1);
      consider(x1, f1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = row.l1(x2);
      consider(x2, f2);
    }
  }
  return best;
}

std::optional<ExtremumKind> classify(double f, double left, double right) {
  if (f >= left && f >= right && (f > left || f > right)) return ExtremumKind::Max;
  if (f <= left && f <= right && (f < left || f < right)) return ExtremumKind::Min;
  return std::nullopt;
}

std::vector<Extremum> merge(std::vector<Extremum> ex) {
  std::sort(ex.begin(), ex.end(), [](const Extremum& x, const Extremum& y) { return x.theta < y.theta; });
  std::vector<Extremum> out;
  for (const Extremum& e : ex) {
    if (!out.empty() && e.theta - out.back().theta <= kMergeTol && e.kind == out.back().kind) {
      if (better(e.value, out.back().value, e.kind)) out.back() = e;
      continue;
    }
    out.push_back(e);
  }
  return out;
}

}  // namespace

double l1_value(int two_j, int two_m, double theta) { return LittleDRow(two_j, two_m).l1(theta); }

L1Profile l1_profile(int two_j, int two_m, int n_samples) {
  check_row(two_j, two_m);
  if (n_samples < 101 || n_samples % 2 == 0)
    throw ValidationError("l1_profile: n_samples must be odd and >= 101, got " + std::to_string(n_samples));

  const LittleDRow row(two_j, two_m);
  const int n = n_samples;
  L1Profile p;
  p.two_j = two_j;
  p.two_m = two_m;
  p.thetas.resize(n);
  p.values.resize(n);
  for (int i = 0; i < n; ++i) {
    p.thetas[i] = kPi * static_cast<double>(2 * i - (n - 1)) / static_cast<double>(n - 1);
    p.values[i] = row.l1(p.thetas[i]);
  }

  const double h = 2.0 * kPi / (n - 1);
  std::vector<Extremum> found;
  for (int i = 1; i + 1 < n; ++i) {
    if (auto k = classify(p.values[i], p.values[i - 1], p.values[i + 1]))
      found.push_back(refine(row, p.thetas[i - 1], p.thetas[i + 1], *k, p.thetas[i]));
  }
  // theta = -pi and theta = pi are the same point of the 2pi-periodic f; each
  // endpoint is refined on its own side so both stay inside [-pi, pi].
  if (auto k = classify(p.values[0], p.values[n - 2], p.values[1])) {
    found.push_back(refine(row, -kPi, -kPi + h, *k, -kPi));
    found.push_back(refine(row, kPi - h, kPi, *k, kPi));
  }
  p.extrema = merge(std::move(found));
  return p;
}

std::optional<Extremum> extremum_near(const L1Profile& p, double theta, double tol) {
  std::optional<Extremum> best;
  for (const Extremum& e : p.extrema) {
    const double dist = std::abs(e.theta - theta);
    if (dist <= tol && (!best || dist < std::abs(best->theta - theta))) best = e;
  }
  return best;
}

std::vector<RowCanonical> canonical_rows(int two_j, int n_samples) {
  check_two_j(two_j);
  static constexpr std::array<double, 5> kPoints{-kPi, -kPi / 2, 0.0, kPi / 2, kPi};
  std::vector<RowCanonical> rows;
  for (int k = 0; k <= two_j; ++k) {
    const int two_m = two_m_at(two_j, k);
    const L1Profile p = l1_profile(two_j, two_m, n_samples);
    RowCanonical rc;
    rc.two_m = two_m;
    for (double c : kPoints) {
      double dist = std::numeric_limits<double>::infinity();
      for (const Extremum& e : p.extrema) dist = std::min(dist, std::abs(e.theta - c));
      rc.worst_distance = std::max(rc.worst_distance, dist);
    }
    const auto hp = extremum_near(p, kPi / 2);
    const auto hm = extremum_near(p, -kPi / 2);
    if (hp && hm && hp->kind == hm->kind) rc.at_half_pi = hp->kind;
    if (const auto e = extremum_near(p, kPi)) rc.at_pi = e->kind;
    rows.push_back(rc);
  }
  return rows;
}

Report canonical_extrema_check(int two_j, int n_samples) {
  Report r;
  for (const RowCanonical& rc : canonical_rows(two_j, n_samples)) {
    std::string detail = "pi/2: ";
    detail += rc.at_half_pi ? to_string(*rc.at_half_pi) : "none";
    detail += ", pi: ";
    detail += rc.at_pi ? to_string(*rc.at_pi) : "none";
    r.checks.push_back(make_check("l1.canonical.2J=" + std::to_string(two_j) + ".M=" + half_int_string(rc.two_m),
                                  rc.worst_distance, kCanonicalTol, detail));
  }
  finalize(r);
  return r;
}

Signature spinor_vector_signature(int two_j, int n_samples) {
  bool all_max = true, any_min = false;
  for (const RowCanonical& rc : canonical_rows(two_j, n_samples)) {
    all_max = all_max && rc.at_half_pi == ExtremumKind::Max;
    any_min = any_min || rc.at_half_pi == ExtremumKind::Min;
  }
  if (any_min) return Signature::VectorLike;
  return all_max ? Signature::SpinorLike : Signature::Mixed;
}

std::string to_string(ExtremumKind k) { return k == ExtremumKind::Max ? "Max" : "Min"; }

std::string to_string(Signature s) {
  switch (s) {
    case Signature::SpinorLike: return "SpinorLike";
    case Signature::VectorLike: return "VectorLike";
    case Signature::Mixed: return "Mixed";
  }
  return {};
}

std::string half_int_string(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

}  // namespace braidnorm
