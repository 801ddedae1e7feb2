#include "braidnorm/tl_braid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "braidnorm/errors.hpp"

namespace braidnorm {

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

// Single-site spin operators, index 0 = up.
CMatrix s_plus() { return {{0.0, 1.0}, {0.0, 0.0}}; }
CMatrix s_minus() { return {{0.0, 0.0}, {1.0, 0.0}}; }
CMatrix n_up() { return {{1.0, 0.0}, {0.0, 0.0}}; }
CMatrix n_down() { return {{0.0, 0.0}, {0.0, 1.0}}; }

struct Cluster {
  cplx value;
  int multiplicity;
};

// Eigenvalues of s collected over the connected components of its sparsity
// graph. Only blocks of size one or two are handled.
std::vector<cplx> block_eigenvalues(const CMatrix& s) {
  const std::size_t n = s.rows();
  const double tol = 1e-14 * std::max(1.0, max_abs(s));
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    std::vector<std::size_t> members{start};
    comp[start] = static_cast<int>(blocks.size());
    for (std::size_t k = 0; k < members.size(); ++k) {
      const std::size_t i = members[k];
      for (std::size_t j = 0; j < n; ++j) {
        if (comp[j] >= 0) continue;
        if (std::abs(s(i, j)) > tol || std::abs(s(j, i)) > tol) {
          comp[j] = comp[start];
          members.push_back(j);
        }
      }
    }
    blocks.push_back(members);
  }

  std::vector<cplx> eig;
  for (const auto& b : blocks) {
    if (b.size() == 1) {
      eig.push_back(s(b[0], b[0]));
    } else if (b.size() == 2) {
      const cplx a = s(b[0], b[0]), bb = s(b[0], b[1]), c = s(b[1], b[0]), d = s(b[1], b[1]);
      const cplx half_tr = 0.5 * (a + d);
      const cplx disc = std::sqrt(0.25 * (a - d) * (a - d) + bb * c);
      eig.push_back(half_tr + disc);
      eig.push_back(half_tr - disc);
    } else {
      throw DecompositionError("kauffman_decompose: invariant block of size " +
                               std::to_string(b.size()) + " exceeds 2");
    }
  }
  return eig;
}

std::vector<Cluster> cluster(const std::vector<cplx>& eig, double tol) {
  std::vector<Cluster> out;
  for (const cplx& z : eig) {
    auto it = std::find_if(out.begin(), out.end(), [&](const Cluster& c) { return std::abs(c.value - z) <= tol; });
    if (it == out.end())
      out.push_back({z, 1});
    else
      ++it->multiplicity;
  }
  std::sort(out.begin(), out.end(), [](const Cluster& x, const Cluster& y) {
    if (x.multiplicity != y.multiplicity) return x.multiplicity > y.multiplicity;
    return std::arg(x.value) < std::arg(y.value);
  });
  return out;
}

}  // namespace

void validate(const TLFamily& fam) {
  if (fam.epsilon != 1 && fam.epsilon != -1) throw ValidationError("epsilon must be +1 or -1");
  if (!std::isfinite(fam.alpha)) throw ValidationError("alpha must be finite");
  if (fam.tag != TLTag::TypeI) {
    if (std::abs(fam.q) == 0.0 || !std::isfinite(std::abs(fam.q))) throw ValidationError("q must be nonzero");
    const bool real = std::abs(fam.q.imag()) <= 1e-15 * std::abs(fam.q);
    const bool unimodular = std::abs(std::abs(fam.q) - 1.0) <= 1e-14;
    if (!real && !unimodular) throw ValidationError("q must be real or unimodular for a real loop value");
  }
  // V T' V^dagger with q != 1 keeps T^2 = dT but breaks T1 T2 T1 = T1.
  if (fam.tag == TLTag::TypeII && std::abs(fam.q - 1.0) > 1e-14)
    throw UnsupportedError("type II is defined at q = 1; use TypeIIPrime for the q-deformed generator");
}

double loop_value(const TLFamily& fam) {
  validate(fam);
  if (fam.tag == TLTag::TypeI) return std::numbers::sqrt2;
  return (fam.q + 1.0 / fam.q).real();
}

TLGen tl_generator(const TLFamily& fam) {
  validate(fam);
  const cplx e = std::polar(1.0, fam.alpha);
  const double eps = fam.epsilon;
  TLGen g{fam, CMatrix(4, 4), loop_value(fam)};
  switch (fam.tag) {
    case TLTag::TypeI:
      g.matrix = kInvSqrt2 * CMatrix{{1.0, 0.0, 0.0, e},
                                     {0.0, 1.0, -kI * eps, 0.0},
                                     {0.0, kI * eps, 1.0, 0.0},
                                     {1.0 / e, 0.0, 0.0, 1.0}};
      break;
    case TLTag::TypeIIPrime:
      g.matrix = CMatrix{{0.0, 0.0, 0.0, 0.0},
                         {0.0, fam.q, e, 0.0},
                         {0.0, 1.0 / e, 1.0 / fam.q, 0.0},
                         {0.0, 0.0, 0.0, 0.0}};
      break;
    case TLTag::TypeII: {
      TLFamily prime = fam;
      prime.tag = TLTag::TypeIIPrime;
      const CMatrix v = swap_conjugator4();
      g.matrix = v * tl_generator(prime).matrix * dagger(v);
      break;
    }
  }
  return g;
}

TLResiduals tl_residuals(const TLGen& t) {
  if (t.matrix.rows() != 4 || t.matrix.cols() != 4) throw ShapeError("tl_residuals: expects a 4x4 generator");
  const CMatrix& m = t.matrix;
  const CMatrix i2 = CMatrix::identity(2);
  const CMatrix t1 = kron(m, i2);
  const CMatrix t2 = kron(i2, m);
  return {residual(m * m, t.loop_d * m), residual(t1 * t2 * t1, t1), residual(t2 * t1 * t2, t2)};
}

std::pair<cplx, cplx> f_roots(double d) {
  const cplx disc = std::sqrt(cplx(d * d - 4.0, 0.0));
  return {0.5 * (-d + disc), 0.5 * (-d - disc)};
}

cplx f_root(double d, Root r) {
  auto [p, m] = f_roots(d);
  return r == Root::Plus ? p : m;
}

CMatrix s_matrix(const TLGen& t, Root r) {
  return CMatrix::identity(t.matrix.rows()) + f_root(t.loop_d, r) * t.matrix;
}

CMatrix normalize_braid(const CMatrix& s) {
  const double scale = std::sqrt(trace(s * dagger(s)).real() / static_cast<double>(s.rows()));
  if (scale == 0.0) throw ValidationError("normalize_braid: zero matrix");
  cplx pivot = 0.0;
  for (const cplx& z : s.entries())
    if (std::abs(z) > 1e-12 * scale) {
      pivot = z;
      break;
    }
  const cplx phase = std::conj(pivot) / std::abs(pivot);
  return (phase / scale) * s;
}

BraidPair three_site_pair(const CMatrix& s) {
  const CMatrix i2 = CMatrix::identity(2);
  BraidPair p{kron(s, i2), kron(i2, s), 0.0};
  p.braid_residual = braid_residual(p.a, p.b);
  return p;
}

BraidPair braid_from_tl(const TLGen& t, Root r) { return three_site_pair(s_matrix(t, r)); }

KauffmanResult kauffman_decompose(const CMatrix& s) {
  if (s.rows() != 4 || s.cols() != 4) throw ShapeError("kauffman_decompose: expects 4x4");
  const std::vector<Cluster> cl = cluster(block_eigenvalues(s), 1e-9);
  if (cl.size() != 2)
    throw DecompositionError("kauffman_decompose: need exactly two distinct eigenvalues, found " +
                             std::to_string(cl.size()));
  for (const auto& c : cl)
    if (std::abs(c.value) < 1e-12) throw DecompositionError("kauffman_decompose: singular matrix");

  const CMatrix eye = CMatrix::identity(4);
  // On ker T, s acts as rho*alpha; on range T as rho*(alpha + d/alpha) =
  // -rho*alpha^{-3}. Their ratio fixes alpha^4; the multiplicity ordering
  // prefers the larger eigenspace as ker T.
  for (int pick = 0; pick < 2; ++pick) {
    const cplx lam_a = cl[pick].value;
    const cplx lam_o = cl[1 - pick].value;
    const cplx a4 = -lam_a / lam_o;
    const cplx root = std::sqrt(a4);
    for (const cplx a2 : {root, -root}) {
      const cplx dc = -(a2 + 1.0 / a2);
      if (std::abs(dc.imag()) > 1e-10 || dc.real() <= 0.0) continue;
      const cplx alpha = std::sqrt(a2);
      const cplx rho = lam_a / alpha;
      const CMatrix t = alpha * (s / rho - alpha * eye);
      const double d = dc.real();
      if (residual(t * t, d * t) > 1e-10) continue;
      return {alpha, rho, t, d};
    }
  }
  throw DecompositionError("kauffman_decompose: no alpha with real positive loop value");
}

CMatrix bell_transform() {
  return kInvSqrt2 * CMatrix{{1.0, 0.0, 0.0, 1.0},
                             {0.0, 1.0, 1.0, 0.0},
                             {0.0, -1.0, 1.0, 0.0},
                             {-1.0, 0.0, 0.0, 1.0}};
}

CMatrix b_type1(cplx q, int epsilon) {
  if (epsilon != 1 && epsilon != -1) throw ValidationError("epsilon must be +1 or -1");
  const double e = epsilon;
  return kInvSqrt2 * CMatrix{{1.0, 0.0, 0.0, q},
                             {0.0, 1.0, e, 0.0},
                             {0.0, -e, 1.0, 0.0},
                             {-1.0 / q, 0.0, 0.0, 1.0}};
}

CMatrix b_type2(cplx q, cplx eta) {
  return CMatrix{{q, 0.0, 0.0, 0.0},
                 {0.0, 0.0, -eta, 0.0},
                 {0.0, -1.0 / eta, q - 1.0 / q, 0.0},
                 {0.0, 0.0, 0.0, q}};
}

CMatrix swap_conjugator4() {
  return CMatrix{{0.0, 1.0, 0.0, 0.0},
                 {1.0, 0.0, 0.0, 0.0},
                 {0.0, 0.0, 0.0, 1.0},
                 {0.0, 0.0, 1.0, 0.0}};
}

CMatrix spin_operator_form(const TLFamily& fam) {
  validate(fam);
  const cplx e = std::polar(1.0, fam.alpha);
  const CMatrix sp = s_plus(), sm = s_minus();
  const CMatrix pp = kron(sp, sp), mm = kron(sm, sm);
  const CMatrix pm = kron(sp, sm), mp = kron(sm, sp);
  switch (fam.tag) {
    case TLTag::TypeI: {
      // The exchange term carries -i*eps with S+ = |up><down|.
      const CMatrix t = CMatrix::identity(4) + e * pp + (1.0 / e) * mm - (kI * double(fam.epsilon)) * (pm - mp);
      return kInvSqrt2 * t;
    }
    case TLTag::TypeII:
      return fam.q * kron(n_up(), n_up()) + (1.0 / fam.q) * kron(n_down(), n_down()) + e * pp + (1.0 / e) * mm;
    case TLTag::TypeIIPrime:
      return fam.q * kron(n_up(), n_down()) + (1.0 / fam.q) * kron(n_down(), n_up()) + e * pm + (1.0 / e) * mp;
  }
  return {};
}

}  // namespace braidnorm
