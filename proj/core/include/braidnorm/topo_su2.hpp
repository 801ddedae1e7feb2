#pragma once

#include <utility>

#include "braidnorm/cxmat.hpp"
#include "braidnorm/tl_braid.hpp"

namespace braidnorm {

// States are column vectors. Four-site states use index s1*8 + s2*4 + s3*2 + s4
// with spin up = 0.

struct PairStates {
  CMatrix psi;  // (|uu> + e^{-i alpha}|dd>)/sqrt2
  CMatrix phi;  // (|ud> + i eps |du>)/sqrt2
};

// Two-site states on (i, j), first tensor factor = site i. Placement on the
// four-site chain is done by embed_pair.
PairStates pair_states(int i, int j, const TLFamily& family);

// Adjacent pairs of the closed chain: (1,2), (2,3), (3,4), (4,1).
void check_pair(int i, int j);
// op (4x4, factors ordered site i then site j) acting on sites i, j of four.
CMatrix embed_pair(const CMatrix& op, int i, int j);
// a on sites (i, j) times b on sites (k, l); the four sites must be distinct.
CMatrix place_two_pairs(const CMatrix& a, int i, int j, const CMatrix& b, int k, int l);

// 4x4 local operator: sqrt2 (|psi><psi| + |phi><phi|) for type I,
// 2 |psi><psi| for type II.
CMatrix tl_local_operator(const TLFamily& family);
CMatrix tl_site_operator(const TLFamily& family, int i, int j);

struct TopoBasis {
  TLFamily family;
  CMatrix e1;
  CMatrix e2;
  double loop_d = 0.0;
  int epsilon = 1;
};

// Type I: e1 = (psi12 psi34 + phi12 phi34)/sqrt2. Type II: e1 = psi12 psi34.
// In both cases e2 = eps (T23 e1 d - e1)/sqrt(d^2 - 1).
TopoBasis topo_basis(const TLFamily& family, int epsilon);

// cup_ij cup_kl with cup = sqrt(d) psi, for the type-II check on e2.
CMatrix cup_product(const TLFamily& family, int i, int j, int k, int l);

struct TwoByTwo {
  CMatrix t12;
  CMatrix t23;
};

// <e_a| T |e_b> for T12 and T23.
TwoByTwo tl_action_2d(const TopoBasis& basis);

// A = diag(alpha + d/alpha, alpha),
// B = 1/(alpha d) [[1 + alpha^2 d, eps r], [eps r, alpha^2 d + d^2 - 1]], r = sqrt(d^2 - 1)
// (principal complex root, so 0 < d < 1 is allowed).
BraidPair ab_from_alpha(cplx alpha, double d, int epsilon = 1);

struct Su2 {
  CMatrix e1p;  // (e1 + i e2)/sqrt2
  CMatrix e2p;  // (i e1 + e2)/sqrt2
  CMatrix jp;
  CMatrix jm;
  CMatrix jz;
};

Su2 su2_generators(const TopoBasis& basis);
// (jp jm + jm jp)/2 + jz^2
CMatrix casimir(const Su2& s);

struct BcsParams {
  double eps_k = 0.0;
  cplx delta_k;
  double theta_k = 0.0;
  double phi = 0.0;
  cplx tau;
  double big_e = 0.0;
};

// Two-level block on (|1,1>, |0,0>), Jz = diag(1/2, -1/2).
struct BcsResult {
  BcsParams params;
  CMatrix h;
  CMatrix d_matrix;
  // |D^dagger H D - E Jz|
  double diag_residual = 0.0;
  // (tau |1,1> + |0,0>)/sqrt(1 + |tau|^2) = D |0,0>
  CMatrix coherent;
  // |H coherent + (E/2) coherent|
  double ground_residual = 0.0;
  // |e^{tau J+} e^{ln(1+|tau|^2) Jz} e^{-conj(tau) J-} - D|
  double disentangle_residual = 0.0;
  // |D - [[c, s e^{-i phi}], [-s e^{i phi}, c]]|
  double display_residual = 0.0;
};

CMatrix bcs_jz();
CMatrix bcs_jp();
CMatrix bcs_jm();
// eps Jz + (delta/2) J+ + (conj(delta)/2) J-
CMatrix bcs_hamiltonian(double eps_k, cplx delta_k);
// expm(xi J+ - conj(xi) J-), xi = (theta/2) e^{-i phi}
CMatrix bcs_d_matrix(double theta, double phi);

BcsResult bcs_diagonalize(double eps_k, cplx delta_k);

}  // namespace braidnorm
