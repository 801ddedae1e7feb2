#include "braidnorm/wigner.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "braidnorm/errors.hpp"

namespace braidnorm {

namespace {

constexpr std::array<std::uint64_t, 21> make_factorials() {
  std::array<std::uint64_t, 21> f{};
  f[0] = 1;
  for (std::size_t i = 1; i < f.size(); ++i) f[i] = f[i - 1] * i;
  return f;
}

constexpr auto kFactorial = make_factorials();

double fact(int n) { return static_cast<double>(kFactorial.at(static_cast<std::size_t>(n))); }

double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

// Integer data shared by the value and derivative sums.
struct Labels {
  int j_plus_m, j_minus_m, j_plus_mp, j_minus_mp;
  int mp_minus_m;  // M' - M
  int chi_lo, chi_hi;
  double prefactor;
};

Labels labels(int two_j, int two_m, int two_mp) {
  check_row(two_j, two_m);
  check_row(two_j, two_mp);
  Labels l{};
  l.j_plus_m = (two_j + two_m) / 2;
  l.j_minus_m = (two_j - two_m) / 2;
  l.j_plus_mp = (two_j + two_mp) / 2;
  l.j_minus_mp = (two_j - two_mp) / 2;
  l.mp_minus_m = (two_mp - two_m) / 2;
  l.chi_lo = std::max(0, l.mp_minus_m);
  l.chi_hi = std::min(l.j_minus_m, l.j_plus_mp);
  l.prefactor = std::sqrt(fact(l.j_plus_m) * fact(l.j_minus_m) * fact(l.j_plus_mp) * fact(l.j_minus_mp));
  return l;
}

double term_weight(const Labels& l, int chi) {
  const double sign = (chi % 2 == 0) ? 1.0 : -1.0;
  return sign / (fact(l.j_minus_m - chi) * fact(l.j_plus_mp - chi) * fact(chi - l.mp_minus_m) * fact(chi));
}

}  // namespace

void check_two_j(int two_j) {
  if (two_j < 1 || two_j > kMaxTwoJ)
    throw ValidationError("two_j must lie in [1, " + std::to_string(kMaxTwoJ) + "], got " + std::to_string(two_j));
}

void check_row(int two_j, int two_m) {
  check_two_j(two_j);
  if (std::abs(two_m) > two_j || (two_j - two_m) % 2 != 0)
    throw ValidationError("label 2M=" + std::to_string(two_m) + " invalid for 2J=" + std::to_string(two_j));
}

double little_d_entry(int two_j, int two_m, int two_mp, double theta) {
  const Labels l = labels(two_j, two_m, two_mp);
  const double c = std::cos(theta / 2.0), s = -std::sin(theta / 2.0);
  double sum = 0.0;
  for (int chi = l.chi_lo; chi <= l.chi_hi; ++chi) {
    const int pc = two_j + l.mp_minus_m - 2 * chi;  // 2J + M' - M - 2chi
    const int ps = 2 * chi - l.mp_minus_m;  // M - M' + 2chi
    sum += term_weight(l, chi) * ipow(c, pc) * ipow(s, ps);
  }
  return l.prefactor * sum;
}

LittleDRow::LittleDRow(int two_j, int two_m) : two_j_(two_j), two_m_(two_m) {
  check_row(two_j, two_m);
  for (int k = 0; k <= two_j; ++k) {
    const Labels l = labels(two_j, two_m, two_m_at(two_j, k));
    prefactor_.push_back(l.prefactor);
    for (int chi = l.chi_lo; chi <= l.chi_hi; ++chi)
      terms_.push_back({k, two_j + l.mp_minus_m - 2 * chi, 2 * chi - l.mp_minus_m, term_weight(l, chi)});
  }
}

void LittleDRow::eval(double theta, std::vector<double>& out) const {
  const double c = std::cos(theta / 2.0), s = -std::sin(theta / 2.0);
  std::array<double, kMaxTwoJ + 1> cp{}, sp{};
  cp[0] = sp[0] = 1.0;
  for (int k = 1; k <= two_j_; ++k) {
    cp[k] = cp[k - 1] * c;
    sp[k] = sp[k - 1] * s;
  }
  out.assign(static_cast<std::size_t>(two_j_ + 1), 0.0);
  for (const Term& t : terms_) out[t.col] += t.weight * cp[t.pc] * sp[t.ps];
  for (std::size_t k = 0; k < out.size(); ++k) out[k] *= prefactor_[k];
}

double LittleDRow::l1(double theta) const {
  thread_local std::vector<double> row;
  eval(theta, row);
  double f = 0.0;
  for (double x : row) f += std::abs(x);
  return f;
}

std::vector<double> little_d_row(int two_j, int two_m, double theta) {
  std::vector<double> row;
  LittleDRow(two_j, two_m).eval(theta, row);
  return row;
}

CMatrix little_d(int two_j, double theta) {
  check_two_j(two_j);
  const std::size_t n = static_cast<std::size_t>(two_j + 1);
  CMatrix d(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      d(r, c) = little_d_entry(two_j, two_m_at(two_j, int(r)), two_m_at(two_j, int(c)), theta);
  return d;
}

CMatrix big_D(int two_j, double theta, double phi) {
  CMatrix d = little_d(two_j, theta);
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c) {
      const double m = two_m_at(two_j, int(r)) / 2.0, mp = two_m_at(two_j, int(c)) / 2.0;
      d(r, c) *= std::polar(1.0, phi * (mp - m));
    }
  return d;
}

CMatrix little_d_closed(int two_j, double theta) {
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0);
  switch (two_j) {
    case 1:
      return {{c, -s}, {s, c}};
    case 2: {
      const double ct = std::cos(theta), st = std::sin(theta);
      return {{(1 + ct) / 2, -st / r2, (1 - ct) / 2},
              {st / r2, ct, -st / r2},
              {(1 - ct) / 2, st / r2, (1 + ct) / 2}};
    }
    case 3:
      return {{c * c * c, -r3 * s * c * c, r3 * s * s * c, -s * s * s},
              {r3 * s * c * c, c * (3 * c * c - 2), s * (3 * s * s - 2), r3 * s * s * c},
              {r3 * s * s * c, -s * (3 * s * s - 2), c * (3 * c * c - 2), -r3 * s * c * c},
              {s * s * s, r3 * s * s * c, r3 * s * c * c, c * c * c}};
    default:
      throw UnsupportedError("little_d_closed: no closed form for 2J=" + std::to_string(two_j));
  }
}

double little_d_derivative_entry(int two_j, int two_m, int two_mp, double theta) {
  const Labels l = labels(two_j, two_m, two_mp);
  const double c = std::cos(theta / 2.0), s = -std::sin(theta / 2.0);
  double sum = 0.0;
  for (int chi = l.chi_lo; chi <= l.chi_hi; ++chi) {
    const int pc = two_j + l.mp_minus_m - 2 * chi;
    const int ps = 2 * chi - l.mp_minus_m;
    // d/dtheta c^pc s^ps = (1/2)[pc c^(pc-1) s^(ps+1) - ps c^(pc+1) s^(ps-1)]
    double dv = 0.0;
    if (pc > 0) dv += pc * ipow(c, pc - 1) * ipow(s, ps + 1);
    if (ps > 0) dv -= ps * ipow(c, pc + 1) * ipow(s, ps - 1);
    sum += term_weight(l, chi) * 0.5 * dv;
  }
  return l.prefactor * sum;
}

CMatrix little_d_derivative(int two_j, double theta) {
  check_two_j(two_j);
  const std::size_t n = static_cast<std::size_t>(two_j + 1);
  CMatrix d(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      d(r, c) = little_d_derivative_entry(two_j, two_m_at(two_j, int(r)), two_m_at(two_j, int(c)), theta);
  return d;
}

SymmetryResiduals symmetry_half_pi(int two_j, int a) {
  check_two_j(two_j);
  if (a < 0 || a > two_j) throw ValidationError("symmetry_half_pi: a out of range");
  const double half_pi = std::numbers::pi / 2.0;
  const int two_m = two_j - 2 * a;
  const double s = (a % 2 == 0) ? 1.0 : -1.0;
  SymmetryResiduals r;
  for (int k = 0; k <= two_j; ++k) {
    const int two_mp = two_m_at(two_j, k);
    const double sign = s * (((two_mp % 2) + 2) % 2 == 0 ? 1.0 : -1.0);
    const double v = little_d_entry(two_j, two_m, two_mp, half_pi) - sign * little_d_entry(two_j, two_m, -two_mp, half_pi);
    const double dv = little_d_derivative_entry(two_j, two_m, two_mp, half_pi) +
                      sign * little_d_derivative_entry(two_j, two_m, -two_mp, half_pi);
    r.value_residual = std::max(r.value_residual, std::abs(v));
    r.derivative_residual = std::max(r.derivative_residual, std::abs(dv));
  }
  return r;
}

double pi_sparsity(int two_j) {
  const CMatrix d = little_d(two_j, std::numbers::pi);
  double worst = 0.0;
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c)
      if (c != d.cols() - 1 - r) worst = std::max(worst, std::abs(d(r, c)));
  return worst;
}

}  // namespace braidnorm
