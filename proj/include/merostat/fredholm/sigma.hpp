#pragma once

// Sigma functions of the sine kernel (fifth Painleve transcendent) and the
// Bessel kernel (third Painleve transcendent), with the auxiliary functions
// q, r and the resolvent diagonal R.
//
// Sine kernel, gamma = -1, x = 2 pi t, xi = x / pi = 2t:
//   log-derivative route   sigma(x) = xi D'(xi) / D(xi),  D(xi) = det(I + T_xi)
//   bilinear route         sigma(x) = -(S~_{2t}^{-1} e, e)_{2t},  e(u) = exp(i pi u)
//   resolvent route        sigma(x) = -2t R(t, t),  R(t, t) = Gamma_t(t, t)
// Bessel kernel, gamma = -1:
//   sigma(s) = (1/4)(S_s^{-1} phi, phi)_s = s R(s, s),
//   [s R(s)]' = q(s)^2 / 4,  R(s) = -d/ds log det S_s.

#include <complex>

#include "merostat/fredholm/operator.hpp"

namespace merostat::fredholm {

inline constexpr int kDefaultQuadrature = 120;

enum class P5Route { LogDerivative, Bilinear, ResolventDiagonal };

std::string to_string(P5Route r);

/// sigma(x) for the sine kernel with gamma = -1.  Complex x is accepted by
/// the log-derivative and bilinear routes (the determinant derivative then
/// uses 4th-order central differences instead of the complex step).
cplx sigma_p5(cplx x, int n = kDefaultQuadrature, P5Route route = P5Route::Bilinear);

/// sigma_1(z, gamma, lambda) = (S_z^{-1} f, f)_z with f(x) = exp(i lambda x)
/// for the sine kernel with coupling gamma.
cplx sigma1(cplx z, double gamma, double lambda, int n = kDefaultQuadrature);

/// Sine kernel, gamma = -1.
///   r(t) = (S_t^{-1} e)(t) on the symmetric interval (-t, t)
///   q(v) = (S~_v^{-1} e)(v) on (0, v)
///   R(t) = Gamma_t(t, t) on (-t, t)
struct QRValues {
  cplx q, r;
  double R = 0.0;
};
cplx q_p5(double v, int n = kDefaultQuadrature);
cplx r_p5(double t, int n = kDefaultQuadrature);
double R_p5(double t, int n = kDefaultQuadrature);
QRValues q_r_functions(double t, int n = kDefaultQuadrature);

/// Bessel kernel with gamma = -1 on (0, s).
struct P3Values {
  double sigma = 0.0;  ///< (1/4)(S^{-1} phi, phi)
  double R = 0.0;      ///< Gamma_s(s, s)
  double q = 0.0;      ///< (S^{-1} phi)(s)
};
P3Values sigma_p3(double s, double alpha, int n = kDefaultQuadrature);
/// log det S_s for the Bessel kernel with gamma = -1.
double log_det_p3(double s, double alpha, int n = kDefaultQuadrature);

/// Discrete triangular factorisation of the sine-kernel operator on (0, a),
/// gamma = -1.  The Cholesky factor L of I + T gives S_-^{-1} ~ W^{-1/2} L^{-1} W^{1/2};
/// applied to e it should reproduce q at the right end of each sub-interval.
struct FactorizationCheck {
  int n = 0;
  double max_error = 0.0;  ///< over the nodes nearest a/4, a/2, 3a/4 and a
};
FactorizationCheck triangular_factorization_check(double a, int n);

/// 4th-order central difference of f at x with step h.
double central_difference(const std::function<double(double)>& f, double x, double h);
cplx central_difference(const std::function<cplx(cplx)>& f, cplx x, double h);

}  // namespace merostat::fredholm
