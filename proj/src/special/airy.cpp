#include <cmath>
#include <numbers>
#include <string>

#include "merostat/error.hpp"
#include "merostat/special/functions.hpp"

namespace merostat::special {

namespace {

constexpr long double kAi0 = 0.355028053887817239260L;
constexpr long double kAiPrime0 = -0.258819403792806798405L;

struct AiryPair {
  long double ai, aip;
};

/// Maclaurin series Ai = Ai(0) f - |Ai'(0)| g with f'' = z f, g'' = z g,
/// f(0) = 1, g'(0) = 1.  Terms peak near exp(2/3 |z|^{3/2}), so long double
/// keeps the absolute error near 1e-15 for |z| <= 6.
template <class T>
std::pair<T, T> maclaurin(T z) {
  const T z3 = z * z * z;
  T fa = 1, ga = z;          // current terms of f and g
  T f = fa, g = ga;
  T fp = 0, gp = 1;          // derivatives f', g'
  for (int k = 1; k < 400; ++k) {
    const long double kk = k;
    fa *= z3 / ((3 * kk - 1) * (3 * kk));
    ga *= z3 / ((3 * kk) * (3 * kk + 1));
    f += fa;
    g += ga;
    fp += fa * (3 * kk) / z;
    gp += ga * (3 * kk + 1) / z;
    if (std::abs(fa) + std::abs(ga) < 1e-24L * (std::abs(f) + std::abs(g))) break;
  }
  return {kAi0 * f + kAiPrime0 * g, kAi0 * fp + kAiPrime0 * gp};
}

/// Ai(x) ~ e^{-zeta} / (2 sqrt(pi) x^{1/4}) sum (-1)^k u_k / zeta^k for large x,
/// with the matching series for Ai'.  The sum stops at its smallest term.
AiryPair asymptotic_positive(long double x) {
  const long double zeta = 2.0L / 3.0L * x * std::sqrt(x);
  long double u = 1, su = 1, sv = 1;
  long double last = 1;
  for (int k = 1; k < 60; ++k) {
    const long double kk = k;
    const long double next = u * (6 * kk - 5) * (6 * kk - 3) * (6 * kk - 1) / ((2 * kk - 1) * 216 * kk);
    const long double term = next / std::pow(zeta, kk);
    if (std::fabs(term) > last) break;
    u = next;
    last = std::fabs(term);
    const long double v = -(6 * kk + 1) / (6 * kk - 1) * u;
    const long double sign = (k % 2) ? -1.0L : 1.0L;
    su += sign * term;
    sv += sign * v / std::pow(zeta, kk);
    if (last < 1e-21L) break;
  }
  const long double pref = std::exp(-zeta) / (2 * std::sqrt(std::numbers::pi_v<long double>));
  return {pref * su / std::pow(x, 0.25L), -pref * std::pow(x, 0.25L) * sv};
}

/// Ai(-x) = (sqrt x / 3) [J_{1/3}(zeta) + J_{-1/3}(zeta)] and
/// Ai'(-x) = (x / 3) [J_{2/3}(zeta) - J_{-2/3}(zeta)], zeta = 2/3 x^{3/2}.
AiryPair bessel_negative(double x) {
  const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
  const double ai = std::sqrt(x) / 3.0 * (bessel_j(1.0 / 3.0, zeta) + bessel_j(-1.0 / 3.0, zeta));
  const double aip = x / 3.0 * (bessel_j(2.0 / 3.0, zeta) - bessel_j(-2.0 / 3.0, zeta));
  return {ai, aip};
}

AiryPair airy_real(double x) {
  if (!std::isfinite(x) || std::fabs(x) > 100.0)
    throw Error(ErrorCode::OutOfDomain, "Airy argument outside [-100, 100]: " + std::to_string(x));
  if (x > 6.0) return asymptotic_positive(x);
  if (x < -5.0) return bessel_negative(-x);
  if (x == 0.0) return {kAi0, kAiPrime0};
  auto [a, ap] = maclaurin<long double>(x);
  return {a, ap};
}

std::pair<std::complex<long double>, std::complex<long double>> airy_complex(cplx z) {
  if (std::abs(z) > 7.0) throw Error(ErrorCode::OutOfDomain, "complex Airy series limited to |z| <= 7");
  if (z == cplx(0.0)) return {kAi0, kAiPrime0};
  return maclaurin<std::complex<long double>>(std::complex<long double>(z.real(), z.imag()));
}

}  // namespace

double airy_ai(double x) { return static_cast<double>(airy_real(x).ai); }
double airy_ai_prime(double x) { return static_cast<double>(airy_real(x).aip); }

cplx airy_ai(cplx z) {
  if (z.imag() == 0.0 && std::fabs(z.real()) <= 100.0) return airy_ai(z.real());
  const auto v = airy_complex(z).first;
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

cplx airy_ai_prime(cplx z) {
  if (z.imag() == 0.0 && std::fabs(z.real()) <= 100.0) return airy_ai_prime(z.real());
  const auto v = airy_complex(z).second;
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

double sinc_pi(double x) {
  const double y = std::numbers::pi * x;
  if (std::fabs(y) < 1e-4) return 1.0 - y * y / 6.0 * (1.0 - y * y / 20.0);
  return std::sin(y) / y;
}

cplx sinc_pi(cplx z) {
  const cplx y = std::numbers::pi * z;
  if (std::abs(y) < 1e-4) return 1.0 - y * y / 6.0 * (1.0 - y * y / 20.0);
  return std::sin(y) / y;
}

std::string to_string(SpecialId id) {
  switch (id) {
    case SpecialId::SincPi: return "sinc_pi";
    case SpecialId::BesselJ: return "bessel_j";
    case SpecialId::AiryAi: return "airy_ai";
    case SpecialId::AiryAiPrime: return "airy_ai_prime";
    case SpecialId::Exp: return "exp";
  }
  return "unknown";
}

cplx eval_special(SpecialId id, cplx x, double alpha) {
  switch (id) {
    case SpecialId::SincPi: return sinc_pi(x);
    case SpecialId::BesselJ:
      if (x.imag() != 0.0) throw Error(ErrorCode::OutOfDomain, "bessel_j takes real arguments only");
      return bessel_j(alpha, x.real());
    case SpecialId::AiryAi: return airy_ai(x);
    case SpecialId::AiryAiPrime: return airy_ai_prime(x);
    case SpecialId::Exp: return std::exp(x);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown special function id");
}

}  // namespace merostat::special
