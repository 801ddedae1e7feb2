#pragma once

#include <vector>

#include "braidnorm/cxmat.hpp"

namespace braidnorm {

// Spin labels are passed as twice their value: two_j = 2J, two_m = 2M.
// Rows and columns run over M = J, J-1, ..., -J.
inline constexpr int kMaxTwoJ = 20;

void check_two_j(int two_j);
void check_row(int two_j, int two_m);
inline int m_index(int two_j, int two_m) { return (two_j - two_m) / 2; }
inline int two_m_at(int two_j, int index) { return two_j - 2 * index; }

double little_d_entry(int two_j, int two_m, int two_mp, double theta);

// One row of d^J with the factorial weights precomputed, for scans over many
// angles. Agrees bitwise with little_d_entry.
class LittleDRow {
 public:
  LittleDRow(int two_j, int two_m);
  int two_j() const { return two_j_; }
  int two_m() const { return two_m_; }
  void eval(double theta, std::vector<double>& out) const;
  // sum over M' of |d_{MM'}(theta)|
  double l1(double theta) const;

 private:
  struct Term {
    int col;
    int pc;  // power of cos(theta/2)
    int ps;  // power of -sin(theta/2)
    double weight;
  };
  int two_j_;
  int two_m_;
  std::vector<Term> terms_;
  std::vector<double> prefactor_;
};

std::vector<double> little_d_row(int two_j, int two_m, double theta);
CMatrix little_d(int two_j, double theta);
// D_{MM'} = e^{i phi (M' - M)} d_{MM'}
CMatrix big_D(int two_j, double theta, double phi);
// Hand-written matrices for 2J = 1, 2, 3.
CMatrix little_d_closed(int two_j, double theta);

double little_d_derivative_entry(int two_j, int two_m, int two_mp, double theta);
CMatrix little_d_derivative(int two_j, double theta);

struct SymmetryResiduals {
  double value_residual = 0.0;
  double derivative_residual = 0.0;
};

// Row M = J - a at theta = pi/2 against its mirror column -M', sign (-1)^a.
SymmetryResiduals symmetry_half_pi(int two_j, int a);
// Largest entry of d(pi) off the anti-diagonal.
double pi_sparsity(int two_j);

}  // namespace braidnorm
