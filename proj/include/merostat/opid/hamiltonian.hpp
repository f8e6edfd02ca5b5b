#pragma once

// The Hamiltonian H(xi) = B'(xi) of the canonical system dW/dxi = i rho J H W.
// Everything is derived from h2 = g(xi, xi):
//   h1 = 1 / (2 h2),  Q = 1 / (2 h2^2),  H = (1/2) [[Q, 1], [1, 1/Q]],
// and the function of the r-form system r(x) = 1 / (sqrt(2) h2(2x)).

#include <complex>
#include <functional>
#include <optional>

#include <Eigen/Dense>

#include "merostat/exact/ratfunc.hpp"
#include "merostat/spectral/r_condition.hpp"

namespace merostat::opid {

using cplx = std::complex<double>;
using exact::RationalFunction;

struct ExpKernelData {
  double beta = 1.0;
  double lambda = 1.0;
  /// u(x) = x + 1/beta - sin(lambda x)/lambda
  cplx u(cplx x) const;
  /// v(x) = x + 1/beta + sin(lambda x)/lambda
  cplx v(cplx x) const;
};

class HamiltonianH {
 public:
  static HamiltonianH from_rational(RationalFunction h2);
  static HamiltonianH from_exp_kernel(double beta, double lambda);

  cplx h2(cplx xi) const { return h2_(xi); }
  cplx h1(cplx xi) const { return 0.5 / h2_(xi); }
  cplx Q(cplx xi) const {
    const cplx h = h2_(xi);
    return 1.0 / (2.0 * h * h);
  }
  Eigen::Matrix2cd H(cplx xi) const;
  /// r(x) = 1 / (sqrt(2) h2(2x)).
  cplx r(cplx x) const { return 1.0 / (std::sqrt(2.0) * h2_(2.0 * x)); }

  const std::optional<RationalFunction>& h2_exact() const { return h2_exact_; }
  /// Q = 1/(2 h2^2) as an exact rational function (rational h2 only).
  std::optional<RationalFunction> Q_exact() const;
  /// r up to the constant 1/sqrt(2): 1 / h2(2x), exact for rational h2.
  std::optional<RationalFunction> r_core() const;
  const std::optional<ExpKernelData>& exp_data() const { return exp_; }

  /// Handle for the r-condition check.  Exact for rational h2; for the
  /// exponential kernel a callable carrying the real roots and poles of r.
  spectral::MeromorphicHandle r_handle() const;

 private:
  std::function<cplx(cplx)> h2_;
  std::optional<RationalFunction> h2_exact_;
  std::optional<ExpKernelData> exp_;
};

HamiltonianH hamiltonian_from_h2(const RationalFunction& h2);

/// h2 = u / v for the kernel 2 beta cos(lambda x).
HamiltonianH exp_kernel_h2(double beta, double lambda);

/// T(xi) of the closed-form inverse S_xi^{-1} f = f - K T^{-1} int K* f.
Eigen::Matrix2cd exp_kernel_T(double beta, double lambda, double xi);

}  // namespace merostat::opid
