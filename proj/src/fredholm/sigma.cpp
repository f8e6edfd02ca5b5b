#include "merostat/fredholm/sigma.hpp"

#include <cmath>
#include <numbers>

#include "merostat/error.hpp"
#include "merostat/numeric/quadrature.hpp"
#include "merostat/special/functions.hpp"

namespace merostat::fredholm {

namespace {

constexpr double kPi = std::numbers::pi;

const SmoothKernel& sine_minus_one() {
  static const SmoothKernel k = SmoothKernel::sine(-1.0);
  return k;
}

cplx e_pi(cplx u) { return std::exp(cplx(0.0, kPi) * u); }

cplx det_sine(cplx xi, int n) { return fredholm_det(nystrom_build(sine_minus_one(), xi, n)); }

/// sigma(x) = -[(S^{-1} c, c) + (S^{-1} s, s)] on the real axis, with c, s the
/// cosine and sine parts of e; S is real symmetric, so the cross terms cancel.
/// Long double keeps the rounding noise of sigma near 1e-18, which matters once
/// sigma is differentiated twice on a fine grid.
double sigma_p5_real_extended(double xi, int n) {
  using LD = long double;
  using Mat = Eigen::Matrix<LD, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Eigen::Matrix<LD, Eigen::Dynamic, 1>;
  const auto& r = numeric::gauss_legendre(n);
  const LD pi = std::numbers::pi_v<LD>;
  Vec x(n), sw(n), c(n), s(n);
  for (int i = 0; i < n; ++i) {
    x(i) = static_cast<LD>(xi) * (0.5L * (static_cast<LD>(r.x[static_cast<size_t>(i)]) + 1.0L));
    sw(i) = std::sqrt(static_cast<LD>(xi) * 0.5L * static_cast<LD>(r.w[static_cast<size_t>(i)]));
    c(i) = sw(i) * std::cos(pi * x(i));
    s(i) = sw(i) * std::sin(pi * x(i));
  }
  Mat A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      const LD d = pi * (x(i) - x(j));
      const LD k = d == 0.0L ? 1.0L : std::sin(d) / d;
      A(i, j) = A(j, i) = (i == j ? 1.0L : 0.0L) - sw(i) * k * sw(j);
    }
  const Eigen::LLT<Mat> llt(A);
  if (llt.info() != Eigen::Success) throw Error(ErrorCode::NearSingular, "I + T is not positive definite");
  return static_cast<double>(-(c.dot(llt.solve(c)) + s.dot(llt.solve(s))));
}

/// D'(xi) by the complex step on the real axis, where D is real.
double det_derivative_complex_step(double xi, int n) {
  const double h = 1e-20 * std::max(1.0, xi);
  return det_sine(cplx(xi, h), n).imag() / h;
}

}  // namespace

std::string to_string(P5Route r) {
  switch (r) {
    case P5Route::LogDerivative: return "log-derivative";
    case P5Route::Bilinear: return "bilinear";
    case P5Route::ResolventDiagonal: return "resolvent-diagonal";
  }
  return "unknown";
}

double central_difference(const std::function<double(double)>& f, double x, double h) {
  return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

cplx central_difference(const std::function<cplx(cplx)>& f, cplx x, double h) {
  return (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

cplx sigma_p5(cplx x, int n, P5Route route) {
  const cplx xi = x / kPi;
  if (x == cplx(0.0)) return 0.0;
  const bool real = x.imag() == 0.0;
  switch (route) {
    case P5Route::LogDerivative: {
      const cplx d = det_sine(xi, n);
      if (std::abs(d) < 1e-300) throw Error(ErrorCode::NearSingular, "D(xi) vanishes");
      const cplx dd = real ? cplx(det_derivative_complex_step(xi.real(), n))
                           : central_difference([n](cplx s) { return det_sine(s, n); }, xi, 1e-3 * std::max(1.0, std::abs(xi)));
      return xi * dd / d;
    }
    case P5Route::Bilinear: {
      if (real && x.real() > 0.0) return sigma_p5_real_extended(xi.real(), n);
      const auto op = nystrom_build(sine_minus_one(), xi, n);
      return -resolvent_bilinear(op, e_pi, e_pi);
    }
    case P5Route::ResolventDiagonal: {
      if (real) {
        const double t = 0.5 * xi.real();
        return -2.0 * t * R_p5(t, n);
      }
      const auto op = nystrom_build(sine_minus_one(), xi, n);
      return -xi * resolvent_kernel(op, 1.0, 1.0);
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown sigma route");
}

cplx sigma1(cplx z, double gamma, double lambda, int n) {
  const auto op = nystrom_build(SmoothKernel::sine(gamma), z, n);
  const Fn f = [lambda](cplx x) { return std::exp(cplx(0.0, lambda) * x); };
  return resolvent_bilinear(op, f, f);
}

cplx q_p5(double v, int n) {
  if (v == 0.0) return 1.0;
  const auto op = nystrom_build(sine_minus_one(), v, n);
  return NystromSolution(op, e_pi).at(1.0);
}

cplx r_p5(double t, int n) {
  if (t == 0.0) return 1.0;
  const auto op = nystrom_build(sine_minus_one(), -t, 2 * t, n);
  return NystromSolution(op, e_pi).at(1.0);
}

double R_p5(double t, int n) {
  if (t == 0.0) return 1.0;  // -gamma k(0, 0)
  const auto op = nystrom_build(sine_minus_one(), -t, 2 * t, n);
  return resolvent_kernel(op, 1.0, 1.0).real();
}

QRValues q_r_functions(double t, int n) { return {q_p5(t, n), r_p5(t, n), R_p5(t, n)}; }

P3Values sigma_p3(double s, double alpha, int n) {
  if (!(alpha > -1.0)) throw Error(ErrorCode::InvalidArgument, "Bessel order must exceed -1");
  if (s == 0.0) return {0.0, 0.25 * special::bessel_phi(alpha, 0.0) * special::bessel_phi(alpha, 0.0), special::bessel_phi(alpha, 0.0)};
  const auto op = nystrom_build(SmoothKernel::bessel(-1.0, alpha), s, n);
  const Fn phi = [alpha](cplx x) { return cplx(special::bessel_phi(alpha, x.real())); };
  const NystromSolution y(op, phi);
  P3Values v;
  v.q = y.at(1.0).real();
  v.sigma = 0.25 * resolvent_bilinear(op, phi, phi).real();
  v.R = resolvent_kernel(op, 1.0, 1.0).real();
  return v;
}

double log_det_p3(double s, double alpha, int n) {
  if (s == 0.0) return 0.0;
  const auto op = nystrom_build(SmoothKernel::bessel(-1.0, alpha), s, n);
  return op.lu->log_abs_determinant();
}

FactorizationCheck triangular_factorization_check(double a, int n) {
  const auto op = nystrom_build(sine_minus_one(), a, n);
  const Eigen::MatrixXd A = op.system().real();
  const Eigen::LLT<Eigen::MatrixXd> llt(A);
  if (llt.info() != Eigen::Success) throw Error(ErrorCode::SingularOperator, "I + T is not positive definite");
  const Eigen::MatrixXcd L = llt.matrixL().toDenseMatrix().cast<cplx>();
  Eigen::VectorXcd b(n);
  for (int i = 0; i < n; ++i) b(i) = std::sqrt(a * op.w[static_cast<size_t>(i)]) * e_pi(op.nodes[static_cast<size_t>(i)]);
  const Eigen::VectorXcd y = L.triangularView<Eigen::Lower>().solve(b);

  FactorizationCheck out;
  out.n = n;
  for (double frac : {0.25, 0.5, 0.75, 1.0}) {
    int best = 0;
    for (int i = 1; i < n; ++i)
      if (std::fabs(op.u[static_cast<size_t>(i)] - frac) < std::fabs(op.u[static_cast<size_t>(best)] - frac)) best = i;
    const double xi = op.nodes[static_cast<size_t>(best)].real();
    const cplx q_disc = y(best) / std::sqrt(a * op.w[static_cast<size_t>(best)]);
    out.max_error = std::max(out.max_error, std::abs(q_disc - q_p5(xi, n)));
  }
  return out;
}

}  // namespace merostat::fredholm
