#include <cmath>
#include <string>
#include <vector>

#include "merostat/error.hpp"
#include "merostat/special/functions.hpp"

namespace merostat::special {

namespace {

constexpr double kSeriesLimit = 12.0;

/// sum_k (-1)^k (x/2)^{2k+alpha} / (k! Gamma(k+alpha+1)).  The largest term
/// at x = 12 is about 4e3, so long double keeps the sum at double accuracy.
long double ascending_series(long double alpha, long double x) {
  const long double h = x / 2;
  const long double q = -h * h;
  long double term = std::pow(h, alpha) / std::tgamma(alpha + 1);
  long double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<long double>(k) * (k + alpha));
    sum += term;
    if (std::fabs(term) <= 1e-22L * std::fabs(sum)) break;
  }
  return sum;
}

/// Miller's algorithm: recur f_{nu-1} = (2 nu / x) f_nu - f_{nu+1} downward
/// from a start index far above x, then normalise with the Neumann sum
///   (x/2)^alpha = sum_k (alpha + 2k) Gamma(alpha + k) / k! J_{alpha+2k}(x).
long double miller(long double alpha, long double x) {
  const int start = 2 * static_cast<int>((std::max(x, alpha) + 30 + 4 * std::sqrt(x)) / 2) + 2;
  std::vector<long double> f(static_cast<size_t>(start) + 2, 0.0L);
  f[static_cast<size_t>(start) + 1] = 0.0L;
  f[static_cast<size_t>(start)] = 1e-300L;
  for (int m = start; m >= 1; --m) {
    const long double nu = alpha + m;
    f[static_cast<size_t>(m) - 1] = (2 * nu / x) * f[static_cast<size_t>(m)] - f[static_cast<size_t>(m) + 1];
    if (std::fabs(f[static_cast<size_t>(m) - 1]) > 1e300L) {
      for (int j = m - 1; j <= start + 1; ++j) f[static_cast<size_t>(j)] *= 1e-300L;
    }
  }
  // g_k = Gamma(alpha + k) / k!, with the k = 0 coefficient alpha Gamma(alpha) = Gamma(alpha + 1).
  long double norm = std::tgamma(alpha + 1) * f[0];
  long double g = std::tgamma(alpha + 1);
  for (int k = 1; 2 * k <= start; ++k) {
    if (k > 1) g *= (alpha + k - 1) / k;
    norm += (alpha + 2 * k) * g * f[static_cast<size_t>(2 * k)];
  }
  return f[0] * std::pow(x / 2, alpha) / norm;
}

void check_domain(double alpha, double x) {
  if (!(alpha > -1.0) || !std::isfinite(alpha))
    throw Error(ErrorCode::OutOfDomain, "Bessel order must exceed -1, got " + std::to_string(alpha));
  if (!(x >= 0.0) || x > 1e4) throw Error(ErrorCode::OutOfDomain, "Bessel argument outside [0, 1e4]: " + std::to_string(x));
  if (x == 0.0 && alpha < 0.0) throw Error(ErrorCode::OutOfDomain, "J_alpha(0) is infinite for negative alpha");
}

}  // namespace

double bessel_j(double alpha, double x) {
  check_domain(alpha, x);
  if (x == 0.0) return alpha == 0.0 ? 1.0 : 0.0;
  if (x <= kSeriesLimit) return static_cast<double>(ascending_series(alpha, x));
  return static_cast<double>(miller(alpha, x));
}

double bessel_phi(double alpha, double x) {
  if (x < 0.0) throw Error(ErrorCode::OutOfDomain, "phi(x) = J_alpha(sqrt x) needs x >= 0");
  return bessel_j(alpha, std::sqrt(x));
}

double bessel_psi(double alpha, double x) {
  if (x < 0.0) throw Error(ErrorCode::OutOfDomain, "psi(x) = x phi'(x) needs x >= 0");
  // x d/dx J(sqrt x) = (sqrt x / 2) J'(sqrt x) and J'(z) = (alpha / z) J(z) - J_{alpha+1}(z).
  const double z = std::sqrt(x);
  if (z == 0.0) {
    if (alpha < 0.0) throw Error(ErrorCode::OutOfDomain, "psi(0) is infinite for negative alpha");
    return 0.0;
  }
  return 0.5 * alpha * bessel_j(alpha, z) - 0.5 * z * bessel_j(alpha + 1.0, z);
}

}  // namespace merostat::special
