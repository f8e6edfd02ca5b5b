#pragma once

// Dense complex LU with partial pivoting.  Storage is row-major so the
// elimination step is a run of contiguous row updates (SIMD kernels).

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace merostat::numeric {

using cplx = std::complex<double>;

class ComplexLU {
 public:
  explicit ComplexLU(const Eigen::MatrixXcd& a);

  int size() const { return n_; }
  std::vector<cplx> solve(std::vector<cplx> b) const;
  Eigen::VectorXcd solve(const Eigen::VectorXcd& b) const;
  /// Solves A^H x = b.
  std::vector<cplx> solve_adjoint(std::vector<cplx> b) const;
  cplx determinant() const;
  /// log|det A| and the phase det A / |det A|.
  double log_abs_determinant() const;
  /// True when a pivot was exactly zero.
  bool singular() const { return singular_; }
  /// Estimate of the 1-norm condition number (Hager-Higham); inf when singular.
  double condition_estimate() const;

 private:
  int n_ = 0;
  std::vector<cplx> lu_;  ///< row-major, unit lower triangle implied
  std::vector<int> perm_;
  int swaps_ = 0;
  bool singular_ = false;
  double norm1_ = 0.0;

  cplx at(int i, int j) const { return lu_[static_cast<size_t>(i) * n_ + j]; }
};

}  // namespace merostat::numeric
