#include <numbers>

#include "braidnorm/errors.hpp"
#include "braidnorm/tl_braid.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace braidnorm;
using testing::kPi;

namespace {

// T from the two-site projectors, built independently of tl_generator.
CMatrix projector_type1(double alpha, int eps) {
  const double h = 1.0 / std::numbers::sqrt2;
  const CMatrix psi = CMatrix::column({h, 0.0, 0.0, h * std::polar(1.0, -alpha)});
  const CMatrix phi = CMatrix::column({0.0, h, h * kI * double(eps), 0.0});
  return std::numbers::sqrt2 * (outer(psi, psi) + outer(phi, phi));
}

}  // namespace

TEST_CASE("loop values") {
  CHECK(loop_value({TLTag::TypeI, 0.3, 1, 1.0}) == doctest::Approx(std::numbers::sqrt2));
  CHECK(loop_value({TLTag::TypeII, 0.3, 1, 1.0}) == doctest::Approx(2.0));
  CHECK(loop_value({TLTag::TypeIIPrime, 0.0, 1, 2.0}) == doctest::Approx(2.5));
  CHECK(loop_value({TLTag::TypeIIPrime, 0.0, 1, std::polar(1.0, 0.4)}) == doctest::Approx(2 * std::cos(0.4)));
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(validate({TLTag::TypeI, 0.0, 2, 1.0}), ValidationError);
  CHECK_THROWS_AS(validate({TLTag::TypeIIPrime, 0.0, 1, cplx(1.0, 1.0)}), ValidationError);
  CHECK_THROWS_AS(validate({TLTag::TypeII, 0.0, 1, 1.5}), UnsupportedError);
  CHECK_NOTHROW(validate({TLTag::TypeIIPrime, 0.0, 1, 1.5}));
}

TEST_CASE("Temperley-Lieb relations over an alpha grid") {
  for (double a : testing::grid(0.0, 2 * kPi, 12)) {
    for (TLTag tag : {TLTag::TypeI, TLTag::TypeII, TLTag::TypeIIPrime})
      for (int eps : {1, -1}) {
        const TLResiduals r = tl_residuals(tl_generator({tag, a, eps, 1.0}));
        CHECK(r.r_square < 1e-12);
        CHECK(r.r_triple_left < 1e-12);
        CHECK(r.r_triple_right < 1e-12);
      }
    for (cplx q : {cplx(0.6), std::polar(1.0, 1.1)}) {
      const TLResiduals r = tl_residuals(tl_generator({TLTag::TypeIIPrime, a, 1, q}));
      CHECK(r.r_square < 1e-12);
      CHECK(r.r_triple_left < 1e-12);
    }
  }
}

TEST_CASE("type-I generator equals the projector construction") {
  for (double a : testing::grid(0.0, 2 * kPi, 8))
    for (int eps : {1, -1}) CHECK(residual(tl_generator({TLTag::TypeI, a, eps, 1.0}).matrix, projector_type1(a, eps)) < 1e-15);
}

TEST_CASE("spin-operator expansions reproduce the generators") {
  for (double a : {0.0, 0.7, 2.5})
    for (TLTag tag : {TLTag::TypeI, TLTag::TypeII, TLTag::TypeIIPrime})
      for (int eps : {1, -1}) {
        const TLFamily f{tag, a, eps, 1.0};
        CHECK(residual(spin_operator_form(f), tl_generator(f).matrix) < 1e-15);
      }
  const TLFamily f{TLTag::TypeIIPrime, 0.4, 1, 1.7};
  CHECK(residual(spin_operator_form(f), tl_generator(f).matrix) < 1e-15);
}

TEST_CASE("f roots for d = sqrt2 are -e^{-+ i pi/4}") {
  const auto [p, m] = f_roots(std::numbers::sqrt2);
  CHECK(std::abs(p + std::polar(1.0, -kPi / 4)) < 1e-15);
  CHECK(std::abs(m + std::polar(1.0, kPi / 4)) < 1e-15);
  // d = 2 has the double root -1
  CHECK(std::abs(f_root(2.0, Root::Plus) + 1.0) < 1e-15);
  for (double d : {0.5, 1.0, std::numbers::sqrt2, 2.0, 3.0}) {
    const cplx f = f_root(d, Root::Minus);
    CHECK(std::abs(f * f + d * f + 1.0) < 1e-14);
  }
}

TEST_CASE("S = I + f T satisfies the braid relation on three sites") {
  for (TLTag tag : {TLTag::TypeI, TLTag::TypeII, TLTag::TypeIIPrime})
    for (Root r : {Root::Plus, Root::Minus}) {
      const TLGen t = tl_generator({tag, 0.9, 1, 1.0});
      CHECK(braid_from_tl(t, r).braid_residual < 1e-12);
      const CMatrix s = normalize_braid(s_matrix(t, r));
      CHECK(unitarity_residual(s) < 1e-12);
    }
}

TEST_CASE("type-I braid matrix is unitary, braids, and is the Bell transform at q = 1") {
  for (double a : {0.0, 0.5, 2.0}) {
    const CMatrix b = b_type1(std::polar(1.0, a), 1);
    CHECK(three_site_pair(b).braid_residual < 1e-12);
    CHECK(unitarity_residual(b) < 1e-15);
  }
  CHECK(residual(b_type1(1.0, 1), bell_transform()) < 1e-15);
}

TEST_CASE("braid matrices are normalised I + f T") {
  // type I only after alpha -> alpha + pi/2 (q -> i e^{i alpha}) with eps flipped
  for (double a : {0.3, 1.1, -2.0})
    for (int e : {1, -1}) {
      const CMatrix b = b_type1(std::polar(1.0, a), e);
      const CMatrix s = normalize_braid(s_matrix(tl_generator({TLTag::TypeI, a + kPi / 2, -e, 1.0}), Root::Minus));
      CHECK(residual(s, b) < 1e-12);
      const CMatrix literal = normalize_braid(s_matrix(tl_generator({TLTag::TypeI, a, e, 1.0}), Root::Minus));
      CHECK(residual(literal, b) > 0.1);
    }
  for (double a : {0.3, 1.1})
    for (Root r : {Root::Plus, Root::Minus}) {
      const CMatrix s = normalize_braid(s_matrix(tl_generator({TLTag::TypeIIPrime, a, 1, 1.0}), r));
      CHECK(residual(s, b_type2(1.0, std::polar(1.0, a))) < 1e-12);
    }
}

TEST_CASE("type-II braid matrix is the permutation at eta = -1, q = 1") {
  const CMatrix p = b_type2(1.0, -1.0);
  const CMatrix perm{{1.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 1.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 1.0}};
  CHECK(residual(p, perm) == 0.0);
  for (cplx q : {cplx(1.0), cplx(1.3), std::polar(1.0, 0.3)})
    CHECK(three_site_pair(b_type2(q, std::polar(1.0, 0.8))).braid_residual < 1e-12);
}

TEST_CASE("Kauffman decomposition") {
  SUBCASE("type I gives d = sqrt2") {
    const CMatrix b = b_type1(std::polar(1.0, 0.6), 1);
    const KauffmanResult k = kauffman_decompose(b);
    CHECK(k.d == doctest::Approx(std::numbers::sqrt2).epsilon(1e-12));
    CHECK(residual(k.rho * (k.alpha * CMatrix::identity(4) + k.t / k.alpha), b) < 1e-12);
    CHECK(residual(k.t * k.t, k.d * k.t) < 1e-10);
    CHECK(std::abs(-(k.alpha * k.alpha + 1.0 / (k.alpha * k.alpha)) - k.d) < 1e-10);
  }
  SUBCASE("permutation needs rho and gives d = 2") {
    const KauffmanResult k = kauffman_decompose(b_type2(1.0, -1.0));
    CHECK(k.d == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(residual(k.rho * (k.alpha * CMatrix::identity(4) + k.t / k.alpha), b_type2(1.0, -1.0)) < 1e-12);
  }
  SUBCASE("identity has a single eigenvalue") {
    CHECK_THROWS_AS(kauffman_decompose(CMatrix::identity(4)), DecompositionError);
  }
  CHECK_THROWS_AS(kauffman_decompose(CMatrix::identity(2)), ShapeError);
}

TEST_CASE("normalize_braid fixes scale and phase") {
  const CMatrix s = (3.0 * std::polar(1.0, 1.2)) * b_type1(1.0, 1);
  const CMatrix n = normalize_braid(s);
  CHECK(residual(n, b_type1(1.0, 1)) < 1e-15);
  CHECK_THROWS_AS(normalize_braid(CMatrix(4, 4)), ValidationError);
}
