#include "braidnorm/ybe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "braidnorm/errors.hpp"
#include "braidnorm/tl_braid.hpp"

namespace braidnorm {

namespace {

constexpr double kPoleTol = 1e-14;

void check_pole(cplx den, double scale, const char* what) {
  if (std::abs(den) <= kPoleTol * std::max(1.0, scale)) throw SingularityError(std::string("pole: ") + what + " = 0");
}

void check_epsilon(int e) {
  if (e != 1 && e != -1) throw ValidationError("epsilon must be +1 or -1");
}

// 1 + X^2 -/+ 2 i eps X
cplx type1_den(cplx x, int eps) { return 1.0 + x * x - 2.0 * kI * double(eps) * x; }
cplx type1_num(cplx x, int eps) { return 1.0 + x * x + 2.0 * kI * double(eps) * x; }

CMatrix a2_type1(cplx u, const FamilyParams& p) {
  const cplx x = p.beta * u;
  const cplx den = type1_den(x, p.epsilon);
  check_pole(den, std::norm(x), "1+(beta u)^2-2i eps beta u");
  return CMatrix::diag({type1_num(x, p.epsilon) / den, 1.0});
}

CMatrix b2_type1(cplx u, const FamilyParams& p) {
  const cplx x = p.beta * u;
  const cplx den = type1_den(x, p.epsilon);
  check_pole(den, std::norm(x), "1+(beta u)^2-2i eps beta u");
  const cplx diag = 1.0 + x * x;
  const cplx off = 2.0 * kI * double(p.epsilon) * x;
  return CMatrix{{diag, off}, {off, diag}} / den;
}

CMatrix a2_type2(cplx u, const FamilyParams& p) {
  const cplx den = p.gamma - u;
  check_pole(den, std::abs(u), "gamma-u");
  return CMatrix::diag({(p.gamma + u) / den, 1.0});
}

CMatrix b2_type2(cplx u, const FamilyParams& p) {
  const cplx den = p.gamma - u;
  check_pole(den, std::abs(u), "gamma-u");
  const cplx off = double(p.epsilon) * std::sqrt(3.0) * u;
  return CMatrix{{2.0 * p.gamma - u, off}, {off, 2.0 * p.gamma + u}} / (2.0 * den);
}

cplx lorentz(cplx v1, cplx v3) {
  const cplx den = 1.0 + v1 * v3;
  check_pole(den, std::abs(v1 * v3), "1+u1*u3");
  return (v1 + v3) / den;
}

}  // namespace

SpectralFamily make_family(FamilyTag tag, const FamilyParams& params) {
  const CompositionRule rule = is_type1(tag) ? CompositionRule::Lorentz : CompositionRule::Galileo;
  return {tag, params, rule};
}

int family_dim(FamilyTag tag) { return (tag == FamilyTag::R4TypeI || tag == FamilyTag::R4TypeII) ? 4 : 2; }

bool is_type1(FamilyTag tag) {
  return tag == FamilyTag::R4TypeI || tag == FamilyTag::A2TypeI || tag == FamilyTag::B2TypeI;
}

FamilyTag companion(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::A2TypeI: return FamilyTag::B2TypeI;
    case FamilyTag::B2TypeI: return FamilyTag::A2TypeI;
    case FamilyTag::A2TypeII: return FamilyTag::B2TypeII;
    case FamilyTag::B2TypeII: return FamilyTag::A2TypeII;
    default: return tag;
  }
}

CMatrix r4_type1(cplx theta, double alpha) {
  const cplx c = std::cos(theta), s = std::sin(theta);
  const cplx e = std::polar(1.0, alpha);
  return CMatrix{{c, 0.0, 0.0, e * s}, {0.0, c, s, 0.0}, {0.0, -s, c, 0.0}, {-s / e, 0.0, 0.0, c}};
}

CMatrix p_matrix(cplx eta) { return b_type2(1.0, eta); }

CMatrix eval_family(const SpectralFamily& fam, cplx u) {
  const FamilyParams& p = fam.params;
  switch (fam.tag) {
    case FamilyTag::R4TypeI: {
      if (fam.rule == CompositionRule::Multiplicative) {
        check_pole(1.0 + u, std::abs(u), "1+x");
        return r4_type1(std::atan((1.0 - u) / (1.0 + u)), p.alpha);
      }
      return r4_type1(u, p.alpha);
    }
    case FamilyTag::R4TypeII:
      return CMatrix::identity(4) + u * p_matrix(p.eta);
    case FamilyTag::A2TypeI:
      check_epsilon(p.epsilon);
      return a2_type1(u, p);
    case FamilyTag::B2TypeI:
      check_epsilon(p.epsilon);
      return b2_type1(u, p);
    case FamilyTag::A2TypeII:
      check_epsilon(p.epsilon);
      return a2_type2(u, p);
    case FamilyTag::B2TypeII:
      check_epsilon(p.epsilon);
      return b2_type2(u, p);
  }
  return {};
}

cplx compose(const SpectralFamily& fam, cplx u1, cplx u3) {
  switch (fam.rule) {
    case CompositionRule::Galileo:
      return u1 + u3;
    case CompositionRule::Multiplicative:
      return u1 * u3;
    case CompositionRule::Lorentz:
      break;
  }
  if (fam.tag == FamilyTag::R4TypeI) return std::atan(lorentz(std::tan(u1), std::tan(u3)));
  if (fam.tag == FamilyTag::A2TypeI || fam.tag == FamilyTag::B2TypeI) {
    const double b = fam.params.beta;
    if (b == 0.0) return u1 + u3;
    return lorentz(b * u1, b * u3) / b;
  }
  return lorentz(u1, u3);
}

double ybe_residual(const SpectralFamily& fam, cplx u1, cplx u3) {
  const cplx u2 = compose(fam, u1, u3);
  if (family_dim(fam.tag) == 4) {
    const CMatrix i2 = CMatrix::identity(2);
    auto r12 = [&](cplx u) { return kron(eval_family(fam, u), i2); };
    auto r23 = [&](cplx u) { return kron(i2, eval_family(fam, u)); };
    return residual(r12(u1) * r23(u2) * r12(u3), r23(u3) * r12(u2) * r23(u1));
  }
  SpectralFamily fa = fam, fb = fam;
  const bool is_a = fam.tag == FamilyTag::A2TypeI || fam.tag == FamilyTag::A2TypeII;
  fa.tag = is_a ? fam.tag : companion(fam.tag);
  fb.tag = companion(fa.tag);
  const CMatrix lhs = eval_family(fa, u1) * eval_family(fb, u2) * eval_family(fa, u3);
  const CMatrix rhs = eval_family(fb, u3) * eval_family(fa, u2) * eval_family(fb, u1);
  return residual(lhs, rhs);
}

double g_constraint_residual(cplx gamma, cplx u, cplx v, double d) {
  auto g = [&](cplx x) {
    check_pole(gamma - x, std::abs(x), "gamma-u");
    return x / (gamma - x);
  };
  const cplx gu = g(u), gv = g(v), guv = g(u + v);
  const cplx lhs = gu + gv + d * gu * gv;
  const cplx rhs = (1.0 - gu * gv) * guv;
  return std::abs(lhs - rhs);
}

double verify_G_constraint(cplx gamma, int samples, double d) {
  if (samples <= 0) throw ValidationError("verify_G_constraint: samples must be positive");
  const cplx tilt{1.0, 0.25};
  double worst = 0.0;
  for (int i = 0; i < samples; ++i)
    for (int j = 0; j < samples; ++j) {
      const double u = 0.1 + 0.4 * (i + 0.5) / samples;
      const double v = 0.1 + 0.4 * (j + 0.5) / samples;
      worst = std::max(worst, g_constraint_residual(gamma, u, v, d));
      worst = std::max(worst, g_constraint_residual(gamma, u * tilt, v * tilt, d));
    }
  return worst;
}

CMatrix a_prime(cplx theta) {
  return CMatrix::diag({std::exp(kI * theta / 2.0), std::exp(-kI * theta / 2.0)});
}

CMatrix b_prime(cplx theta, double phi) {
  const cplx c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  const cplx off = kI * std::sin(phi) * s;
  return CMatrix{{c + kI * s * std::cos(phi), off}, {off, c - kI * s * std::cos(phi)}};
}

Reparam reparameterize_theta(FamilyTag tag, const FamilyParams& params, cplx u) {
  if (family_dim(tag) != 2) throw ValidationError("reparameterize_theta: needs a 2-dim family tag");
  check_epsilon(params.epsilon);
  const bool type1 = is_type1(tag);
  cplx num, den;
  if (type1) {
    const cplx x = params.beta * u;
    num = type1_num(x, params.epsilon);
    den = type1_den(x, params.epsilon);
    check_pole(den, std::norm(x), "1+(beta u)^2-2i eps beta u");
  } else {
    num = params.gamma + u;
    den = params.gamma - u;
    check_pole(den, std::abs(u), "gamma-u");
  }
  if (std::abs(num) <= kPoleTol * std::max(1.0, std::abs(den)))
    throw SingularityError("reparameterize_theta: ratio is zero");

  Reparam r;
  r.theta = kI * std::log(num / den);
  r.phi = type1 ? std::numbers::pi / 2.0 : params.epsilon * 2.0 * std::numbers::pi / 3.0;
  const cplx rho = std::exp(kI * r.theta / 2.0);
  const SpectralFamily fa = make_family(type1 ? FamilyTag::A2TypeI : FamilyTag::A2TypeII, params);
  const SpectralFamily fb = make_family(type1 ? FamilyTag::B2TypeI : FamilyTag::B2TypeII, params);
  const CMatrix a = rho * eval_family(fa, u);
  const CMatrix b = rho * eval_family(fb, u);

  r.matrix_check = std::numeric_limits<double>::infinity();
  for (int sign : {1, -1}) {
    const cplx th = double(sign) * r.theta;
    const double res = std::max(residual(a, a_prime(th)), residual(b, b_prime(th, r.phi)));
    if (res < r.matrix_check) {
      r.matrix_check = res;
      r.theta_sign = sign;
    }
  }
  return r;
}

}  // namespace braidnorm
