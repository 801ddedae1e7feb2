#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace braidnorm {

using cplx = std::complex<double>;

inline constexpr cplx kI{0.0, 1.0};

// Dense row-major complex matrix. Sizes here never exceed 16x16, so storage
// is a plain vector and every operation allocates its result.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  // Throws ValidationError on a size mismatch or a non-finite entry.
  CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static CMatrix identity(std::size_t n);
  static CMatrix zeros(std::size_t rows, std::size_t cols);
  static CMatrix diag(const std::vector<cplx>& d);
  // Column vector.
  static CMatrix column(const std::vector<cplx>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<cplx>& entries() const { return data_; }
  bool all_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

CMatrix matmul(const CMatrix& a, const CMatrix& b);
CMatrix dagger(const CMatrix& a);
CMatrix transpose(const CMatrix& a);
CMatrix conj(const CMatrix& a);
CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix hadamard(const CMatrix& a, const CMatrix& b);
// Scaling and squaring with a degree-18 Taylor polynomial.
CMatrix expm(const CMatrix& a);

// max |a_ij - b_ij|
double residual(const CMatrix& a, const CMatrix& b);
// residual(a a^dagger, I)
double unitarity_residual(const CMatrix& a);
// Induced infinity norm (max absolute row sum).
double norm_inf(const CMatrix& a);
double max_abs(const CMatrix& a);
cplx trace(const CMatrix& a);

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(cplx s, const CMatrix& a);
CMatrix operator*(const CMatrix& a, cplx s);
CMatrix operator/(const CMatrix& a, cplx s);

// ab - ba
CMatrix commutator(const CMatrix& a, const CMatrix& b);
// a b a vs b a b
double braid_residual(const CMatrix& a, const CMatrix& b);

// Outer product |u><v| of two column vectors (v is conjugated).
CMatrix outer(const CMatrix& u, const CMatrix& v);
// <u|v>
cplx inner(const CMatrix& u, const CMatrix& v);
double norm2(const CMatrix& v);

}  // namespace braidnorm
