#pragma once

#include <utility>

#include "braidnorm/cxmat.hpp"

namespace braidnorm {

enum class TLTag { TypeI, TypeII, TypeIIPrime };

// alpha is the flux phase: e^{i alpha} in the type-I corners, eta = e^{i alpha}
// for type II. q deforms the TypeIIPrime diagonal and must be real or
// unimodular so that d = q + 1/q is real; TypeII only exists at q = 1.
struct TLFamily {
  TLTag tag = TLTag::TypeI;
  double alpha = 0.0;
  int epsilon = 1;
  cplx q = 1.0;
};

struct TLGen {
  TLFamily family;
  CMatrix matrix;
  double loop_d = 0.0;
};

struct BraidPair {
  CMatrix a;
  CMatrix b;
  double braid_residual = 0.0;
};

struct TLResiduals {
  double r_square = 0.0;
  double r_triple_left = 0.0;
  double r_triple_right = 0.0;
};

enum class Root { Plus, Minus };

struct KauffmanResult {
  cplx alpha;
  // Overall scalar: s = rho (alpha I + alpha^{-1} T).
  cplx rho;
  CMatrix t;
  double d = 0.0;
};

void validate(const TLFamily& fam);
double loop_value(const TLFamily& fam);

TLGen tl_generator(const TLFamily& fam);
TLResiduals tl_residuals(const TLGen& t);

// Roots of f^2 + d f + 1 = 0; Plus is (-d + sqrt(d^2 - 4))/2.
std::pair<cplx, cplx> f_roots(double d);
cplx f_root(double d, Root r);

// S = I + f T (rho dropped).
CMatrix s_matrix(const TLGen& t, Root r);
// S scaled to unit norm per trace(S S^dagger) = n, phase fixed so the first
// nonzero entry (row-major) is real positive.
CMatrix normalize_braid(const CMatrix& s);
BraidPair braid_from_tl(const TLGen& t, Root r);
// (s x I2, I2 x s) with its 8x8 braid residual.
BraidPair three_site_pair(const CMatrix& s);

KauffmanResult kauffman_decompose(const CMatrix& s);

CMatrix bell_transform();
// (1/sqrt2)[[1,0,0,q],[0,1,eps,0],[0,-eps,1,0],[-1/q,0,0,1]]
CMatrix b_type1(cplx q, int epsilon);
// [[q,0,0,0],[0,0,-eta,0],[0,-1/eta,q-1/q,0],[0,0,0,q]]
CMatrix b_type2(cplx q, cplx eta);
// 4x4 permutation exchanging basis states 0<->1 and 2<->3.
CMatrix swap_conjugator4();

CMatrix spin_operator_form(const TLFamily& fam);

}  // namespace braidnorm
