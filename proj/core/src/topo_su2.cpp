#include "braidnorm/topo_su2.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "braidnorm/errors.hpp"

namespace braidnorm {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

int spin_at(std::size_t x, int site) { return static_cast<int>((x >> (4 - site)) & 1U); }

void check_site(int s) {
  if (s < 1 || s > 4) throw ValidationError("site index must be in 1..4, got " + std::to_string(s));
}

void check_topo_family(const TLFamily& fam) {
  validate(fam);
  if (fam.tag == TLTag::TypeIIPrime) throw UnsupportedError("topological basis is built for type I and type II only");
  if (fam.tag == TLTag::TypeII && std::abs(fam.q - 1.0) > 0.0)
    throw UnsupportedError("topological basis for type II requires q = 1");
}

}  // namespace

void check_pair(int i, int j) {
  check_site(i);
  check_site(j);
  if (i == j) throw ValidationError("pair sites collide: " + std::to_string(i));
  const bool adjacent = j == i + 1 || (i == 4 && j == 1);
  if (!adjacent)
    throw ValidationError("unsupported pair (" + std::to_string(i) + "," + std::to_string(j) +
                          "); expected (1,2), (2,3), (3,4) or (4,1)");
}

PairStates pair_states(int i, int j, const TLFamily& family) {
  check_site(i);
  check_site(j);
  if (i == j) throw ValidationError("pair sites collide: " + std::to_string(i));
  validate(family);
  PairStates p;
  p.psi = CMatrix::column({kInvSqrt2, 0.0, 0.0, kInvSqrt2 * std::polar(1.0, -family.alpha)});
  p.phi = CMatrix::column({0.0, kInvSqrt2, kInvSqrt2 * kI * static_cast<double>(family.epsilon), 0.0});
  return p;
}

CMatrix embed_pair(const CMatrix& op, int i, int j) {
  check_site(i);
  check_site(j);
  if (i == j) throw ValidationError("pair sites collide: " + std::to_string(i));
  if (op.rows() != 4 || op.cols() != 4) throw ShapeError("embed_pair: operator must be 4x4");
  const std::size_t mask = ~((std::size_t{1} << (4 - i)) | (std::size_t{1} << (4 - j))) & 15U;
  CMatrix out(16, 16);
  for (std::size_t x = 0; x < 16; ++x) {
    for (std::size_t y = 0; y < 16; ++y) {
      if ((x & mask) != (y & mask)) continue;
      out(x, y) = op(2 * spin_at(x, i) + spin_at(x, j), 2 * spin_at(y, i) + spin_at(y, j));
    }
  }
  return out;
}

CMatrix place_two_pairs(const CMatrix& a, int i, int j, const CMatrix& b, int k, int l) {
  for (int s : {i, j, k, l}) check_site(s);
  if (i == j || i == k || i == l || j == k || j == l || k == l) throw ValidationError("place_two_pairs: sites must be distinct");
  if (a.rows() != 4 || b.rows() != 4 || a.cols() != 1 || b.cols() != 1)
    throw ShapeError("place_two_pairs: expected two 4-dim column vectors");
  CMatrix out(16, 1);
  for (std::size_t x = 0; x < 16; ++x)
    out(x, 0) = a(2 * spin_at(x, i) + spin_at(x, j), 0) * b(2 * spin_at(x, k) + spin_at(x, l), 0);
  return out;
}

CMatrix tl_local_operator(const TLFamily& family) {
  check_topo_family(family);
  const PairStates p = pair_states(1, 2, family);
  if (family.tag == TLTag::TypeI) return std::numbers::sqrt2 * (outer(p.psi, p.psi) + outer(p.phi, p.phi));
  return 2.0 * outer(p.psi, p.psi);
}

CMatrix tl_site_operator(const TLFamily& family, int i, int j) {
  check_pair(i, j);
  return embed_pair(tl_local_operator(family), i, j);
}

CMatrix cup_product(const TLFamily& family, int i, int j, int k, int l) {
  check_topo_family(family);
  const double d = loop_value(family);
  const CMatrix psi = pair_states(1, 2, family).psi;
  return d * place_two_pairs(psi, i, j, psi, k, l);
}

TopoBasis topo_basis(const TLFamily& family, int epsilon) {
  check_topo_family(family);
  if (epsilon != 1 && epsilon != -1) throw ValidationError("epsilon must be +1 or -1");
  TopoBasis b;
  b.family = family;
  b.epsilon = epsilon;
  b.loop_d = loop_value(family);
  const double d = b.loop_d;
  const PairStates p = pair_states(1, 2, family);
  if (family.tag == TLTag::TypeI)
    b.e1 = kInvSqrt2 * (place_two_pairs(p.psi, 1, 2, p.psi, 3, 4) + place_two_pairs(p.phi, 1, 2, p.phi, 3, 4));
  else
    b.e1 = place_two_pairs(p.psi, 1, 2, p.psi, 3, 4);
  const CMatrix t23e1 = tl_site_operator(family, 2, 3) * b.e1;
  b.e2 = (static_cast<double>(epsilon) / std::sqrt(d * d - 1.0)) * (d * t23e1 - b.e1);
  return b;
}

TwoByTwo tl_action_2d(const TopoBasis& basis) {
  const CMatrix* e[2] = {&basis.e1, &basis.e2};
  auto project = [&](const CMatrix& t) {
    CMatrix m(2, 2);
    for (int a = 0; a < 2; ++a)
      for (int c = 0; c < 2; ++c) m(a, c) = inner(*e[a], t * *e[c]);
    return m;
  };
  return {project(tl_site_operator(basis.family, 1, 2)), project(tl_site_operator(basis.family, 2, 3))};
}

BraidPair ab_from_alpha(cplx alpha, double d, int epsilon) {
  if (epsilon != 1 && epsilon != -1) throw ValidationError("epsilon must be +1 or -1");
  if (std::abs(alpha) == 0.0) throw ValidationError("alpha must be nonzero");
  const cplx implied = -(alpha * alpha + 1.0 / (alpha * alpha));
  if (std::abs(implied - d) > 1e-10)
    throw ValidationError("alpha and d are inconsistent: -(alpha^2 + alpha^-2) = (" + std::to_string(implied.real()) +
                          ", " + std::to_string(implied.imag()) + "), d = " + std::to_string(d));
  if (!(d > 0.0)) throw ValidationError("ab_from_alpha needs d > 0");
  // imaginary for d < 1; only r^2 = d^2 - 1 enters the braid relation
  const cplx r = static_cast<double>(epsilon) * std::sqrt(cplx(d * d - 1.0));
  const cplx a2d = alpha * alpha * d;
  BraidPair p;
  p.a = CMatrix::diag({alpha + d / alpha, alpha});
  p.b = (1.0 / (alpha * d)) * CMatrix{{1.0 + a2d, r}, {r, a2d + d * d - 1.0}};
  p.braid_residual = braid_residual(p.a, p.b);
  return p;
}

Su2 su2_generators(const TopoBasis& basis) {
  Su2 s;
  s.e1p = kInvSqrt2 * (basis.e1 + kI * basis.e2);
  s.e2p = kInvSqrt2 * (kI * basis.e1 + basis.e2);
  s.jp = outer(s.e1p, s.e2p);
  s.jm = outer(s.e2p, s.e1p);
  s.jz = 0.5 * (outer(s.e1p, s.e1p) - outer(s.e2p, s.e2p));
  return s;
}

CMatrix casimir(const Su2& s) { return 0.5 * (s.jp * s.jm + s.jm * s.jp) + s.jz * s.jz; }

CMatrix bcs_jz() { return CMatrix::diag({0.5, -0.5}); }
CMatrix bcs_jp() { return CMatrix{{0.0, 1.0}, {0.0, 0.0}}; }
CMatrix bcs_jm() { return CMatrix{{0.0, 0.0}, {1.0, 0.0}}; }

CMatrix bcs_hamiltonian(double eps_k, cplx delta_k) {
  return eps_k * bcs_jz() + (0.5 * delta_k) * bcs_jp() + (0.5 * std::conj(delta_k)) * bcs_jm();
}

CMatrix bcs_d_matrix(double theta, double phi) {
  const cplx xi = std::polar(theta / 2, -phi);
  return expm(xi * bcs_jp() - std::conj(xi) * bcs_jm());
}

BcsResult bcs_diagonalize(double eps_k, cplx delta_k) {
  if (!(eps_k > 0.0)) throw ValidationError("bcs_diagonalize: eps_k must be > 0 (theta_k in [0, pi/2) branch)");
  if (!std::isfinite(delta_k.real()) || !std::isfinite(delta_k.imag()) || !std::isfinite(eps_k))
    throw ValidationError("bcs_diagonalize: non-finite input");
  BcsResult r;
  BcsParams& p = r.params;
  p.eps_k = eps_k;
  p.delta_k = delta_k;
  p.big_e = std::hypot(eps_k, std::abs(delta_k));
  p.theta_k = std::atan2(std::abs(delta_k), eps_k);
  // delta = -|delta| e^{-i phi}
  if (std::abs(delta_k) > 0.0) {
    p.phi = std::fmod(std::numbers::pi - std::arg(delta_k), 2 * std::numbers::pi);
    if (p.phi < 0) p.phi += 2 * std::numbers::pi;
  }
  p.tau = std::polar(std::tan(p.theta_k / 2), -p.phi);

  r.h = bcs_hamiltonian(eps_k, delta_k);
  r.d_matrix = bcs_d_matrix(p.theta_k, p.phi);
  r.diag_residual = residual(dagger(r.d_matrix) * r.h * r.d_matrix, p.big_e * bcs_jz());

  const double norm = std::sqrt(1.0 + std::norm(p.tau));
  r.coherent = CMatrix::column({p.tau / norm, 1.0 / norm});
  r.ground_residual = residual(r.h * r.coherent, (-p.big_e / 2) * r.coherent);

  const CMatrix dis = expm(p.tau * bcs_jp()) * expm(std::log(1.0 + std::norm(p.tau)) * bcs_jz()) *
                      expm(-std::conj(p.tau) * bcs_jm());
  r.disentangle_residual = residual(dis, r.d_matrix);

  const double c = std::cos(p.theta_k / 2), s = std::sin(p.theta_k / 2);
  const CMatrix display{{c, s * std::polar(1.0, -p.phi)}, {-s * std::polar(1.0, p.phi), c}};
  r.display_residual = residual(r.d_matrix, display);
  return r;
}

}  // namespace braidnorm
