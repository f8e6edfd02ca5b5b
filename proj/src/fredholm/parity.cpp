#include "merostat/fredholm/parity.hpp"

#include <cmath>

#include "merostat/error.hpp"
#include "merostat/special/functions.hpp"

namespace merostat::fredholm {

namespace {

SmoothKernel folded_sine(double gamma, double sign) {
  return SmoothKernel::custom(
      [gamma, sign](cplx x, cplx y) { return gamma * (special::sinc_pi(x - y) + sign * special::sinc_pi(x + y)); },
      sign > 0 ? "sine-even" : "sine-odd");
}

}  // namespace

double sine_kernel_h2(double gamma, double xi, int n) {
  if (xi == 0.0) return 1.0;
  const auto op = nystrom_build(SmoothKernel::sine(gamma), xi, n);
  return NystromSolution(op, [](cplx) { return cplx(1.0); }).at(1.0).real();
}

ParitySplit parity_split(double gamma, double t, int n) {
  if (t < 0.0) throw Error(ErrorCode::InvalidArgument, "parity split needs t >= 0");
  ParitySplit p;
  if (t == 0.0 || gamma == 0.0) return p;
  p.D = fredholm_det(nystrom_build(SmoothKernel::sine(gamma), 2 * t, n)).real();
  p.D_plus = fredholm_det(nystrom_build(folded_sine(gamma, 1.0), t, n)).real();
  p.D_minus = fredholm_det(nystrom_build(folded_sine(gamma, -1.0), t, n)).real();
  p.ratio = p.D_minus / p.D_plus;
  p.h2 = sine_kernel_h2(gamma, 2 * t, n);
  return p;
}

NormBound bessel_norm_bound(double gamma, double alpha, double xi, int n) {
  NormBound b;
  if (gamma == 0.0 || xi == 0.0) return b;
  const auto op = nystrom_build(SmoothKernel::bessel(gamma, alpha), xi, n);
  const Eigen::MatrixXd T = op.T.real();
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T, Eigen::EigenvaluesOnly);
  b.norm = es.eigenvalues().cwiseAbs().maxCoeff();
  b.bound_ok = b.norm <= std::fabs(gamma) + 1e-8;
  return b;
}

}  // namespace merostat::fredholm
