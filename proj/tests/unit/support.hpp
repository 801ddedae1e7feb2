#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "braidnorm/cxmat.hpp"

namespace testing {

using braidnorm::CMatrix;
using braidnorm::cplx;

inline constexpr double kPi = std::numbers::pi;

inline std::vector<double> grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int k = 0; k < n; ++k) g[k] = lo + (hi - lo) * k / (n - 1);
  return g;
}

// Plain triple loop, kept separate from the library's matmul.
inline CMatrix naive_mul(const CMatrix& a, const CMatrix& b) {
  CMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

inline double max_diff(const CMatrix& a, const CMatrix& b) {
  double w = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) w = std::max(w, std::abs(a(i, j) - b(i, j)));
  return w;
}

}  // namespace testing
