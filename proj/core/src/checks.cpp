#include "braidnorm/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "braidnorm/brm_pipeline.hpp"
#include "braidnorm/errors.hpp"
#include "braidnorm/l1_extrema.hpp"
#include "braidnorm/tl_braid.hpp"
#include "braidnorm/topo_su2.hpp"
#include "braidnorm/wigner.hpp"
#include "braidnorm/ybe.hpp"

namespace braidnorm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> alpha_grid(int n) {
  std::vector<double> g(n);
  for (int k = 0; k < n; ++k) g[k] = 2 * kPi * k / n;
  return g;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int k = 0; k < n; ++k) g[k] = n == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * k / (n - 1);
  return g;
}

const char* tag_name(TLTag t) {
  switch (t) {
    case TLTag::TypeI: return "typeI";
    case TLTag::TypeII: return "typeII";
    case TLTag::TypeIIPrime: return "typeIIprime";
  }
  return "";
}

// Families with epsilon = +-1 (type I) over an alpha grid.
std::vector<TLFamily> tl_grid(TLTag tag, int n_alpha, cplx q = 1.0) {
  std::vector<TLFamily> out;
  for (double a : alpha_grid(n_alpha))
    for (int e : {1, -1}) {
      if (tag != TLTag::TypeI && e == -1) continue;
      out.push_back({tag, a, e, q});
    }
  return out;
}

using Reg = std::vector<RegisteredCheck>;

void add(Reg& r, std::string name, double tol, std::function<Outcome(std::uint64_t)> fn) {
  r.push_back({std::move(name), tol, std::move(fn)});
}

void add_temperley(Reg& r) {
  for (TLTag tag : {TLTag::TypeI, TLTag::TypeII, TLTag::TypeIIPrime}) {
    const std::string base = std::string("temperley.") + tag_name(tag);
    auto worst = [tag](int which, cplx q) {
      double w = 0.0;
      for (const TLFamily& f : tl_grid(tag, 12, q)) {
        const TLResiduals res = tl_residuals(tl_generator(f));
        w = std::max(w, which == 0 ? res.r_square : std::max(res.r_triple_left, res.r_triple_right));
      }
      return w;
    };
    add(r, base + ".square", 1e-12, [worst](std::uint64_t) { return Outcome{worst(0, 1.0), "T^2 = dT, 12-point alpha grid"}; });
    add(r, base + ".triple", 1e-12, [worst](std::uint64_t) {
      return Outcome{worst(1, 1.0), "T1 T2 T1 = T1 and T2 T1 T2 = T2, 12-point alpha grid"};
    });
    if (tag == TLTag::TypeIIPrime) {
      add(r, base + ".q-deformed", 1e-12, [worst](std::uint64_t) {
        return Outcome{std::max({worst(0, 1.5), worst(1, 1.5), worst(0, std::polar(1.0, 0.7)), worst(1, std::polar(1.0, 0.7))}),
                       "q = 1.5 and q = e^{0.7i}"};
      });
    }
  }
}

void add_braid(Reg& r) {
  add(r, "braid.b_typeI", 1e-12, [](std::uint64_t) {
    double w = 0.0;
    for (double a : alpha_grid(12))
      for (int e : {1, -1}) w = std::max(w, three_site_pair(b_type1(std::polar(1.0, a), e)).braid_residual);
    return Outcome{w, "8x8, q = e^{i alpha} on 12 points, eps = +-1"};
  });
  add(r, "braid.b_typeII", 1e-12, [](std::uint64_t) {
    double w = 0.0;
    for (double a : alpha_grid(12)) w = std::max(w, three_site_pair(b_type2(1.0, std::polar(1.0, a))).braid_residual);
    return Outcome{w, "8x8, q = 1, eta = e^{i alpha} on 12 points"};
  });
  for (TLTag tag : {TLTag::TypeI, TLTag::TypeII, TLTag::TypeIIPrime})
    for (Root root : {Root::Plus, Root::Minus}) {
      const std::string name =
          std::string("braid.s_matrix.") + tag_name(tag) + (root == Root::Plus ? ".plus" : ".minus");
      add(r, name, 1e-12, [tag, root](std::uint64_t) {
        double w = 0.0;
        for (const TLFamily& f : tl_grid(tag, 12)) w = std::max(w, braid_from_tl(tl_generator(f), root).braid_residual);
        return Outcome{w, "S = I + f T on 3 sites"};
      });
    }
}

void add_ybe(Reg& r) {
  for (const std::string& fam : ybe_family_names()) {
    const double tol = fam == "r4-type2" ? 1e-12 : 1e-10;
    add(r, "ybe." + fam, tol, [fam](std::uint64_t) { return Outcome{ybe_grid_residual(fam, 20), "20x20 grid"}; });
  }
  add(r, "ybe.g_constraint.gamma=1", 1e-13,
      [](std::uint64_t) { return Outcome{verify_G_constraint(1.0, 20), "20x20 real and tilted grid"}; });
  add(r, "ybe.g_constraint.gamma=2+i", 1e-13,
      [](std::uint64_t) { return Outcome{verify_G_constraint(cplx(2.0, 1.0), 20), "20x20 real and tilted grid"}; });
  add(r, "ybe.r4-type1.multiplicative", 1e-10, [](std::uint64_t) {
    SpectralFamily f = make_family(FamilyTag::R4TypeI, {});
    f.rule = CompositionRule::Multiplicative;
    double w = 0.0;
    for (double a : linspace(0.5, 2.0, 10))
      for (double b : linspace(0.5, 2.0, 10)) w = std::max(w, ybe_residual(f, a, b));
    return Outcome{w, "x in [0.5, 2], x2 = x1 x3"};
  });
}

void add_wigner(Reg& r) {
  for (int tj = 1; tj <= 3; ++tj)
    add(r, "wigner.closed_form.2J=" + std::to_string(tj), 1e-13, [tj](std::uint64_t) {
      double w = 0.0;
      for (double t : linspace(-kPi, kPi, 100)) w = std::max(w, residual(little_d(tj, t), little_d_closed(tj, t)));
      return Outcome{w, "100 theta points"};
    });
  for (int tj = 1; tj <= 8; ++tj) {
    add(r, "wigner.unitarity.2J=" + std::to_string(tj), 1e-12, [tj](std::uint64_t) {
      double w = 0.0;
      for (double t : linspace(-kPi, kPi, 25))
        for (double p : {0.0, 0.7, 2 * kPi / 3}) w = std::max(w, unitarity_residual(big_D(tj, t, p)));
      return Outcome{w, "25 theta x 3 phi"};
    });
    add(r, "wigner.derivative.2J=" + std::to_string(tj), 1e-6, [tj](std::uint64_t) {
      const double h = 1e-5;
      double w = 0.0;
      for (double t : linspace(-3.0, 3.0, 25)) {
        const CMatrix fd = (little_d(tj, t + h) - little_d(tj, t - h)) / cplx(2 * h);
        w = std::max(w, residual(little_d_derivative(tj, t), fd));
      }
      return Outcome{w, "central differences, h = 1e-5"};
    });
    add(r, "wigner.modulus.2J=" + std::to_string(tj), 1e-14, [tj](std::uint64_t) {
      double w = 0.0;
      for (double t : linspace(-kPi, kPi, 9)) {
        const CMatrix d = little_d(tj, t), bd = big_D(tj, t, 1.1);
        for (std::size_t i = 0; i < d.rows(); ++i)
          for (std::size_t j = 0; j < d.cols(); ++j) w = std::max(w, std::abs(std::abs(bd(i, j)) - std::abs(d(i, j))));
      }
      return Outcome{w, "|D| = |d|"};
    });
  }
}

void add_mirror_identities(Reg& r) {
  for (int tj = 1; tj <= 8; ++tj) {
    add(r, "extremum_c.symmetry.2J=" + std::to_string(tj), 1e-12, [tj](std::uint64_t) {
      double w = 0.0;
      for (int a = 0; a <= tj; ++a) {
        const SymmetryResiduals s = symmetry_half_pi(tj, a);
        w = std::max({w, s.value_residual, s.derivative_residual});
      }
      return Outcome{w, "value and derivative mirror identities at pi/2, all rows"};
    });
    add(r, "extremum_c.pi_sparsity.2J=" + std::to_string(tj), 1e-13,
        [tj](std::uint64_t) { return Outcome{pi_sparsity(tj), "d(pi) off the anti-diagonal"}; });
  }
}

// Residual of the located extremum near theta: value error, or +inf if it is
// missing or of the wrong kind.
double extremum_error(const L1Profile& p, double theta, ExtremumKind kind, double value) {
  const auto e = extremum_near(p, theta);
  if (!e || e->kind != kind) return kInf;
  return std::abs(e->value - value);
}

void add_l1(Reg& r) {
  for (int tj = 1; tj <= 3; ++tj)
    for (int k = 0; k <= tj; ++k) {
      const int tm = two_m_at(tj, k);
      add(r, "l1.canonical.2J=" + std::to_string(tj) + ".M=" + half_int_string(tm), kCanonicalTol, [tj, tm](std::uint64_t) {
        for (const RowCanonical& rc : canonical_rows(tj))
          if (rc.two_m == tm) {
            std::string detail = "pi/2: ";
            detail += rc.at_half_pi ? to_string(*rc.at_half_pi) : "none";
            detail += ", pi: ";
            detail += rc.at_pi ? to_string(*rc.at_pi) : "none";
            return Outcome{rc.worst_distance, detail};
          }
        return Outcome{kInf, "row not found"};
      });
    }
  add(r, "l1.values.2J=1.M=1/2", 1e-9, [](std::uint64_t) {
    const L1Profile p = l1_profile(1, 1);
    double w = 0.0;
    for (double t : {-kPi / 2, kPi / 2}) w = std::max(w, extremum_error(p, t, ExtremumKind::Max, std::numbers::sqrt2));
    for (double t : {-kPi, 0.0, kPi}) w = std::max(w, extremum_error(p, t, ExtremumKind::Min, 1.0));
    return Outcome{w, "max sqrt2 at +-pi/2, min 1 at 0 and +-pi"};
  });
  add(r, "l1.values.2J=2.M=1", 1e-9, [](std::uint64_t) {
    double w = 0.0;
    for (int tm : {2, -2}) {
      const L1Profile p = l1_profile(2, tm);
      for (double t : {-kPi / 2, kPi / 2}) w = std::max(w, extremum_error(p, t, ExtremumKind::Max, 1 + 1 / std::numbers::sqrt2));
      for (double t : {-kPi, 0.0, kPi}) w = std::max(w, extremum_error(p, t, ExtremumKind::Min, 1.0));
    }
    return Outcome{w, "M = +-1: max 1 + 1/sqrt2 at +-pi/2, min 1 at 0 and +-pi"};
  });
  add(r, "l1.values.2J=2.M=0", 1e-9, [](std::uint64_t) {
    const L1Profile p = l1_profile(2, 0);
    double w = 0.0;
    for (double t : {-kPi / 2, kPi / 2}) w = std::max(w, extremum_error(p, t, ExtremumKind::Min, std::numbers::sqrt2));
    const double t0 = std::atan(std::numbers::sqrt2);
    for (double t : {-kPi + t0, -t0, t0, kPi - t0})
      w = std::max(w, extremum_error(p, t, ExtremumKind::Max, std::numbers::sqrt3));
    return Outcome{w, "local min sqrt2 at +-pi/2, global max sqrt3 at +-atan(sqrt2), +-(pi - atan(sqrt2))"};
  });
  for (int tj = 1; tj <= 3; ++tj)
    add(r, "l1.signature.2J=" + std::to_string(tj), 0.0, [tj](std::uint64_t) {
      const Signature expected = tj % 2 ? Signature::SpinorLike : Signature::VectorLike;
      const Signature got = spinor_vector_signature(tj);
      return Outcome{got == expected ? 0.0 : 1.0, to_string(got)};
    });
  add(r, "l1.bounds", 1e-14, [](std::uint64_t) {
    double w = 0.0;
    for (int tj = 1; tj <= 8; ++tj)
      for (int k = 0; k <= tj; ++k) {
        const LittleDRow row(tj, two_m_at(tj, k));
        for (double t : linspace(-kPi, kPi, 401)) {
          const double f = row.l1(t);
          w = std::max({w, 1.0 - f, f - std::sqrt(tj + 1.0)});
        }
      }
    return Outcome{std::max(w, 0.0), "1 <= f <= sqrt(2J+1), 2J <= 8"};
  });
}

void add_brm(Reg& r) {
  for (int tj = 1; tj <= 3; ++tj)
    for (BrmTag tag : {BrmTag::TypeI, BrmTag::TypeII}) {
      const std::string base = "brm.canonical.2J=" + std::to_string(tj) + ".type" + to_string(tag);
      add(r, base + ".match", 1e-12, [tj, tag](std::uint64_t) {
        const DerivedBrm d = canonical_brm(tj, tag);
        return Outcome{d.paper_match_residual, "one fitted unit phase"};
      });
      add(r, base + ".braid", 1e-12, [tj, tag](std::uint64_t) {
        const DerivedBrm d = canonical_brm(tj, tag);
        return Outcome{d.braid_residual, "conjugated pair"};
      });
      add(r, base + ".unitary", 1e-12, [tj, tag](std::uint64_t) {
        const DerivedBrm d = canonical_brm(tj, tag);
        return Outcome{std::max({unitarity_residual(d.a), unitarity_residual(d.b), unitarity_residual(d.a_tilde),
                                 unitarity_residual(d.b_tilde)}),
                       ""};
      });
    }
  for (int sign : {1, -1})
    add(r, std::string("brm.constraint_curve.2J=1.phi") + (sign > 0 ? "+" : "-"), 1e-12, [sign](std::uint64_t) {
      return Outcome{constraint_curve_residual(1, 200, sign), "200 points on |theta| >= pi/3"};
    });
  for (int tj : {2, 3})
    add(r, "brm.constraint_curve.2J=" + std::to_string(tj) + ".reported", kInf, [tj](std::uint64_t) {
      return Outcome{constraint_curve_residual(tj, 200, 1), "measured only, not asserted"};
    });
  add(r, "brm.transpose_closure", 1e-12, [](std::uint64_t) {
    double w = 0.0;
    for (double t : linspace(kPi / 3, kPi, 20)) {
      const BraidPair p = brm_pair(1, t, 1);
      w = std::max(w, braid_residual(transpose(p.a), transpose(p.b)));
    }
    return Outcome{w, "2J = 1"};
  });
  add(r, "brm.conjugation_invariance", 1e-12, [](std::uint64_t) {
    double w = 0.0;
    for (int tj = 1; tj <= 3; ++tj)
      for (double t : linspace(kPi / 3, kPi, 7)) {
        const BraidPair p = brm_pair(tj, t, 1);
        for (Convention c : {Convention::UXUdag, Convention::UdagXU}) {
          const BraidPair q = conjugate_pair(p, canonical_conjugator(tj), c);
          w = std::max(w, std::abs(q.braid_residual - p.braid_residual));
        }
      }
    return Outcome{w, ""};
  });
  for (BrmTag tag : {BrmTag::TypeI, BrmTag::TypeII})
    add(r, std::string("brm.ybe_2d.type") + to_string(tag), 1e-12, [tag](std::uint64_t) {
      double w = 0.0;
      for (double a : linspace(-1.2, 1.2, 10))
        for (double b : linspace(-1.2, 1.2, 10)) w = std::max(w, ybe_2d_check(tag, a, b));
      return Outcome{w, "10x10 grid on [-1.2, 1.2]"};
    });
  add(r, "brm.r4_three_site", 1e-12, [](std::uint64_t) {
    const BrmType t = canonical_type(1, BrmTag::TypeI);
    const CMatrix rr = r4_theta_phi(t.theta_star / 2, t.phi_star);
    return Outcome{three_site_pair(rr).braid_residual, "matrix angle theta*/2"};
  });
}

void add_topo(Reg& r) {
  for (TLTag tag : {TLTag::TypeI, TLTag::TypeII}) {
    const std::string base = std::string("topo.") + tag_name(tag);
    add(r, base + ".site_algebra", 1e-12, [tag](std::uint64_t) {
      const int pairs[4][2] = {{1, 2}, {2, 3}, {3, 4}, {4, 1}};
      double w = 0.0;
      for (double a : alpha_grid(8)) {
        const TLFamily f{tag, a, 1, 1.0};
        const double d = loop_value(f);
        std::vector<CMatrix> t;
        for (auto& p : pairs) t.push_back(tl_site_operator(f, p[0], p[1]));
        for (int k = 0; k < 4; ++k) {
          const CMatrix& x = t[k];
          const CMatrix& y = t[(k + 1) % 4];
          w = std::max({w, residual(x * x, d * x), residual(x * y * x, x), residual(y * x * y, y)});
        }
        w = std::max(w, max_abs(commutator(t[0], t[2])));
        w = std::max(w, residual(tl_local_operator(f), tl_generator(f).matrix));
      }
      return Outcome{w, "all four adjacent pairs, 8-point alpha grid"};
    });
    for (int eps : {1, -1}) {
      const std::string b2 = base + ".eps=" + (eps > 0 ? "+1" : "-1");
      add(r, b2 + ".orthonormal", 1e-12, [tag, eps](std::uint64_t) {
        double w = 0.0;
        for (double a : alpha_grid(8)) {
          const TopoBasis b = topo_basis({tag, a, 1, 1.0}, eps);
          w = std::max({w, std::abs(inner(b.e1, b.e1) - 1.0), std::abs(inner(b.e2, b.e2) - 1.0), std::abs(inner(b.e1, b.e2))});
        }
        return Outcome{w, ""};
      });
      add(r, b2 + ".t_actions", 1e-12, [tag, eps](std::uint64_t) {
        double w = 0.0;
        for (double a : alpha_grid(8)) {
          const TopoBasis b = topo_basis({tag, a, 1, 1.0}, eps);
          const double d = b.loop_d, s = eps * std::sqrt(d * d - 1);
          const TwoByTwo t = tl_action_2d(b);
          w = std::max(w, residual(t.t12, CMatrix::diag({d, 0.0})));
          w = std::max(w, residual(t.t23, (1.0 / d) * CMatrix{{1.0, s}, {s, d * d - 1.0}}));
          const CMatrix t12 = tl_site_operator(b.family, 1, 2), t34 = tl_site_operator(b.family, 3, 4);
          w = std::max({w, max_abs(t12 * b.e2), max_abs(t34 * b.e2), residual(t34 * b.e1, d * b.e1)});
        }
        return Outcome{w, "diag(d, 0) and (1/d)[[1, eps r], [eps r, d^2 - 1]]"};
      });
      add(r, b2 + ".su2", 1e-12, [tag, eps](std::uint64_t) {
        const TopoBasis b = topo_basis({tag, 0.3, 1, 1.0}, eps);
        const Su2 s = su2_generators(b);
        const CMatrix c = casimir(s);
        const double w = std::max({residual(commutator(s.jz, s.jp), s.jp), residual(commutator(s.jz, s.jm), -s.jm),
                                   residual(commutator(s.jp, s.jm), 2.0 * s.jz), max_abs(s.jp * s.jp), max_abs(s.jm * s.jm),
                                   residual(c * s.e1p, 0.75 * s.e1p), residual(c * s.e2p, 0.75 * s.e2p),
                                   residual(c * b.e1, 0.75 * b.e1), residual(c * b.e2, 0.75 * b.e2),
                                   residual(s.jz * s.e1p, 0.5 * s.e1p), residual(s.jz * s.e2p, -0.5 * s.e2p)});
        return Outcome{w, "commutators, J^2 = 3/4, (J+-)^2 = 0"};
      });
    }
  }
  add(r, "topo.typeII.e2_from_cups", 1e-12, [](std::uint64_t) {
    double w = 0.0;
    for (int eps : {1, -1}) {
      const TLFamily f{TLTag::TypeII, 0.0, 1, 1.0};
      const TopoBasis b = topo_basis(f, eps);
      const double d = b.loop_d;
      const CMatrix e2 = (eps / std::sqrt(d * d - 1)) * (cup_product(f, 2, 3, 4, 1) - (1.0 / d) * cup_product(f, 1, 2, 3, 4));
      w = std::max(w, residual(b.e2, e2));
    }
    return Outcome{w, "e2 ~ cup23 cup41 - cup12 cup34 / d"};
  });
  add(r, "topo.ab.typeI", 1e-12, [](std::uint64_t) {
    const BraidPair p = ab_from_alpha(std::polar(1.0, 3 * kPi / 8), std::numbers::sqrt2, 1);
    const CMatrix a = std::polar(1.0, -kPi / 8) * CMatrix::diag({1.0, kI});
    const CMatrix b = (std::polar(1.0, kPi / 8) / std::numbers::sqrt2) * CMatrix{{1.0, -kI}, {-kI, 1.0}};
    return Outcome{std::max({residual(p.a, a), residual(p.b, b), p.braid_residual}), "d = sqrt2, alpha = e^{3i pi/8}"};
  });
  add(r, "topo.ab.typeII", 1e-12, [](std::uint64_t) {
    const BraidPair p = ab_from_alpha(kI, 2.0, 1);
    const double s3 = std::numbers::sqrt3;
    // the overall factor i is dropped; B carries +1/2
    const CMatrix a = kI * CMatrix::diag({-1.0, 1.0});
    const CMatrix b = (0.5 * kI) * CMatrix{{1.0, -s3}, {-s3, -1.0}};
    return Outcome{std::max({residual(p.a, a), residual(p.b, b), p.braid_residual}), "d = 2, alpha = i"};
  });
  add(r, "topo.ab.consistency", 1e-12, [](std::uint64_t) {
    double w = 0.0;
    for (int eps : {1, -1}) {
      const std::pair<TLTag, cplx> cases[2] = {{TLTag::TypeI, std::polar(1.0, 3 * kPi / 8)}, {TLTag::TypeII, kI}};
      for (const auto& [tag, alpha] : cases) {
        const TopoBasis b = topo_basis({tag, 0.0, 1, 1.0}, eps);
        const TwoByTwo t = tl_action_2d(b);
        const BraidPair p = ab_from_alpha(alpha, b.loop_d, eps);
        const CMatrix id = CMatrix::identity(2);
        w = std::max({w, residual(p.a, alpha * id + t.t12 / alpha), residual(p.b, alpha * id + t.t23 / alpha)});
      }
    }
    return Outcome{w, "A = alpha I + t12/alpha, B = alpha I + t23/alpha"};
  });
  add(r, "topo.ab.alpha_curve", 1e-12, [](std::uint64_t) {
    double w = 0.0;
    for (double beta : linspace(kPi / 4 + 0.01, kPi / 2, 25)) {
      const cplx alpha = std::polar(1.0, beta);
      const double d = -std::real(alpha * alpha + 1.0 / (alpha * alpha));
      w = std::max(w, ab_from_alpha(alpha, d, 1).braid_residual);
    }
    return Outcome{w, "d = -(alpha^2 + alpha^-2) in (0, 2]"};
  });
}

void add_bcs(Reg& r) {
  auto samples = [](std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> mag(0.1, 5.0), ph(-kPi, kPi);
    std::vector<std::pair<double, cplx>> out;
    for (int k = 0; k < 20; ++k) {
      const double e = mag(rng);
      const double m = mag(rng);
      out.push_back({e, std::polar(m, ph(rng))});
    }
    return out;
  };
  auto scan = [samples](std::uint64_t seed, auto&& metric) {
    double w = 0.0;
    for (const auto& [e, d] : samples(seed)) w = std::max(w, metric(bcs_diagonalize(e, d)));
    return w;
  };
  add(r, "bcs.diagonalization", 1e-12, [scan](std::uint64_t s) {
    return Outcome{scan(s, [](const BcsResult& b) { return b.diag_residual; }), "D^dagger H D = E Jz, 20 seeded samples"};
  });
  add(r, "bcs.energy", 1e-12, [scan](std::uint64_t s) {
    return Outcome{scan(s,
                        [](const BcsResult& b) {
                          // eigenvalues of the 2x2 H are +-sqrt(-det H)
                          const cplx det = b.h(0, 0) * b.h(1, 1) - b.h(0, 1) * b.h(1, 0);
                          const double oracle = 2 * std::sqrt(-det.real());
                          return std::abs(b.params.big_e - oracle) / oracle;
                        }),
                   "relative error of E"};
  });
  add(r, "bcs.ground_state", 1e-12, [scan](std::uint64_t s) {
    return Outcome{scan(s, [](const BcsResult& b) { return b.ground_residual; }), "H xi = -(E/2) xi"};
  });
  add(r, "bcs.disentangling", 1e-10, [scan](std::uint64_t s) {
    return Outcome{scan(s, [](const BcsResult& b) { return b.disentangle_residual; }), ""};
  });
  add(r, "bcs.display", 1e-12, [scan](std::uint64_t s) {
    return Outcome{scan(s,
                        [](const BcsResult& b) {
                          return std::max(b.display_residual,
                                          residual(b.d_matrix, big_D(1, -b.params.theta_k, b.params.phi)));
                        }),
                   "2x2 display and big_D(1/2, -theta, phi)"};
  });
}

}  // namespace

std::vector<std::string> ybe_family_names() { return {"r4-type1", "r4-type2", "2d-type1", "2d-type2"}; }

double ybe_grid_residual(const std::string& family, int grid) {
  if (grid <= 0) throw UsageError("grid must be positive, got " + std::to_string(grid));
  std::vector<SpectralFamily> fams;
  // Half-width of the u grid. R4TypeI takes the matrix angle, i.e. half the
  // rotation angle, so 0.6 covers rotations in (-1.2, 1.2).
  double span = 0.4;
  if (family == "r4-type1") {
    for (double a : {0.0, 0.9}) fams.push_back(make_family(FamilyTag::R4TypeI, {.alpha = a}));
    span = 0.6;
  } else if (family == "r4-type2") {
    for (cplx eta : {cplx(1.0), cplx(-1.0), std::polar(1.0, kPi / 3)})
      fams.push_back(make_family(FamilyTag::R4TypeII, {.eta = eta}));
    span = 1.2;
  } else if (family == "2d-type1") {
    for (int e : {1, -1})
      for (double beta : {1.0, 0.7}) fams.push_back(make_family(FamilyTag::A2TypeI, {.epsilon = e, .beta = beta}));
    span = 0.9;
  } else if (family == "2d-type2") {
    for (int e : {1, -1})
      for (cplx g : {cplx(1.0), cplx(2.0, 1.0)}) fams.push_back(make_family(FamilyTag::A2TypeII, {.gamma = g, .epsilon = e}));
  } else {
    throw UsageError("unknown family '" + family + "'; expected r4-type1, r4-type2, 2d-type1 or 2d-type2");
  }
  const std::vector<double> g = linspace(-span, span, grid);
  double w = 0.0;
  for (const SpectralFamily& f : fams)
    for (double u1 : g)
      for (double u3 : g) w = std::max(w, ybe_residual(f, u1, u3));
  return w;
}

const std::vector<RegisteredCheck>& check_registry() {
  static const Reg reg = [] {
    Reg r;
    add_temperley(r);
    add_braid(r);
    add_ybe(r);
    add_wigner(r);
    add_mirror_identities(r);
    add_l1(r);
    add_brm(r);
    add_topo(r);
    add_bcs(r);
    return r;
  }();
  return reg;
}

CheckResult run_check(const RegisteredCheck& c, std::uint64_t seed) {
  try {
    Outcome o = c.run(seed);
    return make_check(c.name, o.residual, c.tolerance, std::move(o.detail));
  } catch (const std::exception& e) {
    return make_check(c.name, std::numeric_limits<double>::quiet_NaN(), c.tolerance, std::string("exception: ") + e.what());
  }
}

}  // namespace braidnorm
