#include "braidnorm/cxmat.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "braidnorm/errors.hpp"

namespace braidnorm {

namespace {

std::string shape_str(const CMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError(std::string(op) + ": shapes " + shape_str(a) + " and " + shape_str(b) + " differ");
}

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_)
    throw ValidationError("CMatrix: " + std::to_string(data_.size()) + " entries for shape " +
                          std::to_string(rows_) + "x" + std::to_string(cols_));
  if (!all_finite()) throw ValidationError("CMatrix: non-finite entry");
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ValidationError("CMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  if (!all_finite()) throw ValidationError("CMatrix: non-finite entry");
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::zeros(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }

CMatrix CMatrix::diag(const std::vector<cplx>& d) {
  CMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

CMatrix CMatrix::column(const std::vector<cplx>& v) { return CMatrix(v.size(), 1, v); }

bool CMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), finite);
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows())
    throw ShapeError("matmul: " + shape_str(a) + " times " + shape_str(b));
  CMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

CMatrix dagger(const CMatrix& a) {
  CMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
  return r;
}

CMatrix transpose(const CMatrix& a) {
  CMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

CMatrix conj(const CMatrix& a) {
  CMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = std::conj(a(i, j));
  return r;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const std::size_t p = b.rows(), q = b.cols();
  CMatrix r(a.rows() * p, a.cols() * q);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l < q; ++l) r(i * p + k, j * q + l) = a(i, j) * b(k, l);
  return r;
}

CMatrix hadamard(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "hadamard");
  CMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) * b(i, j);
  return r;
}

CMatrix expm(const CMatrix& a) {
  if (!a.square()) throw ShapeError("expm: non-square " + shape_str(a));
  const std::size_t n = a.rows();
  constexpr int kDegree = 18;

  int s = 0;
  const double nrm = norm_inf(a);
  if (nrm > 0.5) s = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
  const CMatrix x = a / std::ldexp(1.0, s);

  // Horner: I + x/1 (I + x/2 (I + ... (I + x/18)))
  const CMatrix eye = CMatrix::identity(n);
  CMatrix p = eye;
  for (int k = kDegree; k >= 1; --k) p = eye + (x * p) / static_cast<double>(k);
  for (int i = 0; i < s; ++i) p = p * p;
  return p;
}

double residual(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "residual");
  double r = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    r = std::max(r, std::abs(a.entries()[i] - b.entries()[i]));
  return r;
}

double unitarity_residual(const CMatrix& a) {
  if (!a.square()) throw ShapeError("unitarity_residual: non-square " + shape_str(a));
  return residual(a * dagger(a), CMatrix::identity(a.rows()));
}

double norm_inf(const CMatrix& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) row += std::abs(a(i, j));
    best = std::max(best, row);
  }
  return best;
}

double max_abs(const CMatrix& a) {
  double r = 0.0;
  for (const auto& z : a.entries()) r = std::max(r, std::abs(z));
  return r;
}

cplx trace(const CMatrix& a) {
  if (!a.square()) throw ShapeError("trace: non-square " + shape_str(a));
  cplx t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "operator+");
  CMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) += b(i, j);
  return r;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "operator-");
  CMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) -= b(i, j);
  return r;
}

CMatrix operator-(const CMatrix& a) { return cplx(-1.0) * a; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) { return matmul(a, b); }

CMatrix operator*(cplx s, const CMatrix& a) {
  CMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) *= s;
  return r;
}

CMatrix operator*(const CMatrix& a, cplx s) { return s * a; }

CMatrix operator/(const CMatrix& a, cplx s) { return (1.0 / s) * a; }

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

double braid_residual(const CMatrix& a, const CMatrix& b) {
  return residual(a * b * a, b * a * b);
}

CMatrix outer(const CMatrix& u, const CMatrix& v) {
  if (u.cols() != 1 || v.cols() != 1) throw ShapeError("outer: expects column vectors");
  return u * dagger(v);
}

cplx inner(const CMatrix& u, const CMatrix& v) {
  if (u.cols() != 1 || v.cols() != 1 || u.rows() != v.rows())
    throw ShapeError("inner: expects column vectors of equal length");
  cplx s = 0.0;
  for (std::size_t i = 0; i < u.rows(); ++i) s += std::conj(u(i, 0)) * v(i, 0);
  return s;
}

double norm2(const CMatrix& v) { return std::sqrt(std::abs(inner(v, v))); }

}  // namespace braidnorm
