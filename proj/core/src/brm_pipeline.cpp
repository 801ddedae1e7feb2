#include "braidnorm/brm_pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "braidnorm/errors.hpp"
#include "braidnorm/wigner.hpp"
#include "braidnorm/ybe.hpp"

namespace braidnorm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kUnitaryTol = 1e-12;

void check_sign(int s) {
  if (s != 1 && s != -1) throw ValidationError("phi_sign must be +1 or -1, got " + std::to_string(s));
}

void check_supported(int two_j) {
  if (two_j < 1 || two_j > 3)
    throw UnsupportedError("canonical BRM is stored only for 2J = 1, 2, 3, got 2J = " + std::to_string(two_j));
}

struct Reference {
  CMatrix a;
  CMatrix b;
};

Reference reference(int two_j, BrmTag tag) {
  const double r2 = std::numbers::sqrt2, s3 = std::numbers::sqrt3;
  const double h = 1.0 / r2;
  const cplx i = kI;
  if (two_j == 1) {
    if (tag == BrmTag::TypeI)
      return {std::polar(1.0, -kPi / 4) * CMatrix::diag({1.0, i}), h * CMatrix{{1.0, -i}, {-i, 1.0}}};
    return {CMatrix::diag({-1.0, 1.0}), 0.5 * CMatrix{{1.0, -s3}, {-s3, -1.0}}};
  }
  if (two_j == 2) {
    if (tag == BrmTag::TypeI)
      return {CMatrix::diag({-i, 1.0, i}), CMatrix{{0.5, h, 0.5}, {-h, 0.0, h}, {0.5, -h, 0.5}}};
    const double r = std::sqrt(6.0) / 4;
    return {CMatrix::diag({-1.0, 1.0, -1.0}),
            CMatrix{{-0.25, i * r, 0.75}, {-i * r, -0.5, -i * r}, {0.75, i * r, -0.25}}};
  }
  if (tag == BrmTag::TypeI) {
    const double q = 1.0 / (2 * r2), r = std::sqrt(6.0) / 4;
    const cplx w = std::polar(1.0, kPi / 4);
    return {CMatrix::diag({-w, w, std::conj(w), -std::conj(w)}),
            CMatrix{{q, r, -r, -q}, {r, -q, q, -r}, {r, -q, -q, r}, {q, r, r, q}}};
  }
  const double a = 3 * s3 / 8;
  return {CMatrix::diag({i, i, -i, -i}),
          CMatrix{{-i / 8.0, i * a, 3.0 / 8, -a},
                  {i * a, i * (5.0 / 8), -s3 / 8, 3.0 / 8},
                  {-3.0 / 8, s3 / 8, -i * (5.0 / 8), -i * a},
                  {a, -3.0 / 8, -i * a, i / 8.0}}};
}

// tan(theta/2), refusing the pole at theta = +-pi.
double half_tan(double theta) {
  const double c = std::cos(theta / 2);
  if (std::abs(c) < 1e-14) throw SingularityError("cos(theta/2) vanishes at theta = " + std::to_string(theta));
  return std::sin(theta / 2) / c;
}

}  // namespace

double phi_from_theta(double theta) {
  const double c = std::cos(theta);
  if (std::abs(1.0 - c) < 1e-15) throw ValidationError("phi_from_theta: 1 - cos(theta) vanishes (theta = 0 is degenerate)");
  const double ratio = c / (1.0 - c);
  if (std::abs(ratio) > 1.0 + 1e-12)
    throw NoBraidSolutionError("cos(theta)/(1 - cos(theta)) = " + std::to_string(ratio) +
                               " lies outside [-1, 1]; no braid angle for theta = " + std::to_string(theta));
  return std::acos(std::clamp(ratio, -1.0, 1.0));
}

BraidPair brm_pair(int two_j, double theta, int phi_sign) {
  check_sign(phi_sign);
  const double phi = phi_sign * phi_from_theta(theta);
  BraidPair p{little_d(two_j, theta), big_D(two_j, theta, phi), 0.0};
  p.braid_residual = braid_residual(p.a, p.b);
  return p;
}

BraidPair conjugate_pair(const BraidPair& p, const CMatrix& u, Convention convention) {
  if (!u.square() || u.rows() != p.a.rows())
    throw ShapeError("conjugate_pair: conjugator is " + std::to_string(u.rows()) + "x" + std::to_string(u.cols()) +
                     ", pair is " + std::to_string(p.a.rows()) + "x" + std::to_string(p.a.cols()));
  const double ur = unitarity_residual(u);
  if (!(ur <= kUnitaryTol)) throw ValidationError("conjugate_pair: conjugator is not unitary (residual " + std::to_string(ur) + ")");
  const CMatrix ud = dagger(u);
  auto apply = [&](const CMatrix& x) { return convention == Convention::UXUdag ? u * x * ud : ud * x * u; };
  BraidPair out{apply(p.a), apply(p.b), 0.0};
  out.braid_residual = braid_residual(out.a, out.b);
  return out;
}

BrmType canonical_type(int two_j, BrmTag tag) {
  check_supported(two_j);
  if (tag == BrmTag::TypeII) return {tag, kPi, 2 * kPi / 3};
  // The spinor derivation starts from theta = -pi/2, the 3x3 and 4x4 ones from +pi/2.
  return {tag, two_j == 1 ? -kPi / 2 : kPi / 2, kPi / 2};
}

CMatrix canonical_conjugator(int two_j) {
  check_supported(two_j);
  const double h = 1.0 / std::numbers::sqrt2;
  const cplx i = kI;
  if (two_j == 1) return h * CMatrix{{1.0, i}, {i, 1.0}};
  if (two_j == 2) return CMatrix{{0.5, h, 0.5}, {i * h, 0.0, -i * h}, {-0.5, h, -0.5}};
  const double q = 1.0 / (2 * std::numbers::sqrt2), r = std::sqrt(6.0) / 4;
  return CMatrix{{i * q, i * r, -i * r, -i * q}, {-r, q, q, -r}, {-i * r, i * q, -i * q, i * r}, {q, r, r, q}};
}

Convention canonical_convention(int two_j) {
  check_supported(two_j);
  return two_j == 1 ? Convention::UXUdag : Convention::UdagXU;
}

cplx fit_phase(const CMatrix& derived, const CMatrix& reference) {
  if (derived.rows() != reference.rows() || derived.cols() != reference.cols())
    throw ShapeError("fit_phase: shape mismatch");
  const auto& ref = reference.entries();
  std::size_t k = 0;
  for (std::size_t n = 1; n < ref.size(); ++n)
    if (std::abs(ref[n]) > std::abs(ref[k]) + 1e-14) k = n;
  if (std::abs(ref[k]) == 0.0) throw ValidationError("fit_phase: reference is zero");
  const cplx ratio = derived.entries()[k] / ref[k];
  if (std::abs(ratio) == 0.0) return 1.0;
  return ratio / std::abs(ratio);
}

DerivedBrm canonical_brm(int two_j, const BrmType& type) {
  check_supported(two_j);
  DerivedBrm out;
  out.brm_type = type;
  out.two_j = two_j;
  out.conjugator = canonical_conjugator(two_j);
  out.convention = canonical_convention(two_j);
  const Reference ref = reference(two_j, type.tag);
  out.a_reference = ref.a;
  out.b_reference = ref.b;

  auto match = [&](double phi, CMatrix& a, CMatrix& b, BraidPair& tilde, cplx& phase) {
    a = little_d(two_j, type.theta_star);
    b = big_D(two_j, type.theta_star, phi);
    tilde = conjugate_pair({a, b, 0.0}, out.conjugator, out.convention);
    phase = fit_phase(tilde.a, ref.a);
    return std::max(residual(tilde.a, phase * ref.a), residual(tilde.b, phase * ref.b));
  };

  BraidPair tilde;
  out.paper_match_residual = match(type.phi_star, out.a, out.b, tilde, out.overall_phase);
  out.a_tilde = tilde.a;
  out.b_tilde = tilde.b;
  out.braid_residual = tilde.braid_residual;

  CMatrix ma, mb;
  BraidPair mt;
  cplx mp;
  out.mirror_branch_residual = match(-type.phi_star, ma, mb, mt, mp);
  return out;
}

DerivedBrm canonical_brm(int two_j, BrmTag tag) { return canonical_brm(two_j, canonical_type(two_j, tag)); }

double ybe_2d_check(BrmTag tag, double theta1, double theta3) {
  const double u1 = half_tan(theta1), u3 = half_tan(theta3);
  double u2 = 0.0, phi = 0.0;
  if (tag == BrmTag::TypeI) {
    const double den = 1.0 + u1 * u3;
    if (std::abs(den) < 1e-14) throw SingularityError("1 + u1*u3 vanishes in the Lorentz composition");
    u2 = (u1 + u3) / den;
    phi = kPi / 2;
  } else {
    u2 = u1 + u3;
    phi = 2 * kPi / 3;
  }
  const double theta2 = 2 * std::atan(u2);
  const CMatrix lhs = a_prime(theta1) * b_prime(theta2, phi) * a_prime(theta3);
  const CMatrix rhs = b_prime(theta3, phi) * a_prime(theta2) * b_prime(theta1, phi);
  return residual(lhs, rhs);
}

double constraint_curve_residual(int two_j, int n_points, int phi_sign) {
  if (n_points < 2) throw ValidationError("constraint_curve_residual: need at least 2 points");
  const int half = n_points / 2;
  const int other = n_points - half;
  double worst = 0.0;
  auto sweep = [&](double lo, double hi, int n) {
    for (int k = 0; k < n; ++k) {
      const double t = n == 1 ? lo : lo + (hi - lo) * k / (n - 1);
      worst = std::max(worst, brm_pair(two_j, t, phi_sign).braid_residual);
    }
  };
  sweep(-kPi, -kPi / 3, half);
  sweep(kPi / 3, kPi, other);
  return worst;
}

CMatrix r4_theta_phi(double theta, double phi) { return r4_type1(theta, -phi); }

const char* to_string(BrmTag tag) { return tag == BrmTag::TypeI ? "I" : "II"; }

}  // namespace braidnorm
