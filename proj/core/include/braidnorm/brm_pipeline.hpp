#pragma once

#include "braidnorm/cxmat.hpp"
#include "braidnorm/tl_braid.hpp"

namespace braidnorm {

enum class BrmTag { TypeI, TypeII };

struct BrmType {
  BrmTag tag = BrmTag::TypeI;
  double theta_star = 0.0;
  double phi_star = 0.0;
};

enum class Convention { UXUdag, UdagXU };

struct DerivedBrm {
  BrmType brm_type;
  int two_j = 1;
  CMatrix a;
  CMatrix b;
  CMatrix conjugator;
  Convention convention = Convention::UXUdag;
  CMatrix a_tilde;
  CMatrix b_tilde;
  // Stored reference forms, up to one overall unit phase.
  CMatrix a_reference;
  CMatrix b_reference;
  double braid_residual = 0.0;
  double paper_match_residual = 0.0;
  // Same comparison for the pair built with -phi_star.
  double mirror_branch_residual = 0.0;
  cplx overall_phase = 1.0;
};

// arccos(cos(theta)/(1 - cos(theta))) in [0, pi].
double phi_from_theta(double theta);

// (d^J(theta), D^J(theta, phi_sign * phi_from_theta(theta))).
BraidPair brm_pair(int two_j, double theta, int phi_sign = 1);

BraidPair conjugate_pair(const BraidPair& p, const CMatrix& u, Convention convention);

// (theta*, phi*) used for the stored 2J = 1, 2, 3 derivations.
BrmType canonical_type(int two_j, BrmTag tag);
CMatrix canonical_conjugator(int two_j);
Convention canonical_convention(int two_j);

DerivedBrm canonical_brm(int two_j, const BrmType& type);
DerivedBrm canonical_brm(int two_j, BrmTag tag);

// Unit phase p with derived ~ p * reference, read off at the largest entry
// of the reference.
cplx fit_phase(const CMatrix& derived, const CMatrix& reference);

// Residual of A'(t1) B'(t2) A'(t3) = B'(t3) A'(t2) B'(t1) with phi = pi/2
// (type I, tan(t/2) composed by the Lorentz rule) or phi = 2pi/3 (type II,
// tan(t/2) composed additively).
double ybe_2d_check(BrmTag tag, double theta1, double theta3);

// Largest braid residual of brm_pair over n points spread evenly on
// [-pi, -pi/3] and [pi/3, pi].
double constraint_curve_residual(int two_j, int n_points, int phi_sign = 1);

// [[c, 0, 0, e^{-i phi} s], [0, c, s, 0], [0, -s, c, 0], [-e^{i phi} s, 0, 0, c]]
// with c = cos(theta), s = sin(theta).
CMatrix r4_theta_phi(double theta, double phi);

const char* to_string(BrmTag tag);

}  // namespace braidnorm
