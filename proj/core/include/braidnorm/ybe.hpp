#pragma once

#include "braidnorm/cxmat.hpp"

namespace braidnorm {

enum class CompositionRule { Lorentz, Galileo, Multiplicative };

enum class FamilyTag { R4TypeI, R4TypeII, A2TypeI, B2TypeI, A2TypeII, B2TypeII };

struct FamilyParams {
  double alpha = 0.0;  // R4TypeI corner phase
  cplx eta = 1.0;      // R4TypeII
  cplx gamma = 1.0;    // A2/B2 TypeII
  int epsilon = 1;     // 2-dim families
  double beta = 1.0;   // A2/B2 TypeI velocity scale
};

// The spectral argument u means:
//   R4TypeI, Lorentz         the matrix angle theta; tan(theta) composes
//   R4TypeI, Multiplicative  x, with tan(theta) = (1 - x)/(1 + x)
//   R4TypeII                 u in I + uP; composes additively
//   A2/B2 TypeI              u; beta*u composes by the Lorentz rule
//   A2/B2 TypeII             u; composes additively
struct SpectralFamily {
  FamilyTag tag = FamilyTag::R4TypeI;
  FamilyParams params;
  CompositionRule rule = CompositionRule::Lorentz;
};

// Family with its natural composition rule.
SpectralFamily make_family(FamilyTag tag, const FamilyParams& params = {});
int family_dim(FamilyTag tag);
bool is_type1(FamilyTag tag);
// A2 <-> B2 partner of a 2-dim family; 4x4 tags map to themselves.
FamilyTag companion(FamilyTag tag);

CMatrix r4_type1(cplx theta, double alpha);
// P(eta) = b_type2(1, eta); the permutation at eta = -1.
CMatrix p_matrix(cplx eta);

CMatrix eval_family(const SpectralFamily& fam, cplx u);
// Middle argument u2 from (u1, u3) under fam.rule.
cplx compose(const SpectralFamily& fam, cplx u1, cplx u3);
double ybe_residual(const SpectralFamily& fam, cplx u1, cplx u3);

// Residual of [a(u)b(v) + b(u)a(v) + d b(u)b(v)] a(u+v) = [a(u)a(v) - b(u)b(v)] b(u+v)
// with a = 1, b = G = u/(gamma - u).
double g_constraint_residual(cplx gamma, cplx u, cplx v, double d = 2.0);
// Max over a samples x samples midpoint grid on [0.1, 0.5]^2 plus the same
// grid rotated into the complex plane by (1 + 0.25i).
double verify_G_constraint(cplx gamma, int samples, double d = 2.0);

// diag(e^{i theta/2}, e^{-i theta/2})
CMatrix a_prime(cplx theta);
// [[c + i s cos(phi), i s sin(phi)], [i s sin(phi), c - i s cos(phi)]],
// c = cos(theta/2), s = sin(theta/2)
CMatrix b_prime(cplx theta, double phi);

struct Reparam {
  cplx theta;
  double phi = 0.0;
  double matrix_check = 0.0;
  // +1 if the rescaled family equals A'(theta), B'(theta, phi); -1 if it
  // equals them at -theta.
  int theta_sign = 1;
};

// Solves ratio(u) = e^{-i theta} on the principal branch and compares the
// rescaled 2-dim family with A'(theta), B'(theta, phi).
Reparam reparameterize_theta(FamilyTag tag, const FamilyParams& params, cplx u);

}  // namespace braidnorm
