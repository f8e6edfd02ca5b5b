#pragma once

// Scalar special functions used by the integral kernels.
//
// Accuracy contracts (checked by the tests against independent oracles):
//   J_alpha(x): relative error <= 1e-12 for x in [0, 100], alpha in (-1, 10]
//   Ai, Ai':    absolute error <= 1e-12 on [-10, 10]
//   sinc:       exact value 1 at the removable point

#include <complex>
#include <string>

namespace merostat::special {

using cplx = std::complex<double>;

/// J_alpha(x) for real alpha > -1 and x >= 0.  Ascending series in long
/// double for x <= 12, Miller backward recurrence above.  Throws OutOfDomain
/// outside alpha > -1, 0 <= x <= 1e4 (and at x = 0 when alpha < 0).
double bessel_j(double alpha, double x);

/// phi(x) = J_alpha(sqrt x) and psi(x) = x phi'(x), x >= 0.
double bessel_phi(double alpha, double x);
double bessel_psi(double alpha, double x);

/// Ai(x) and Ai'(x) on the real line; |x| <= 100.
double airy_ai(double x);
double airy_ai_prime(double x);

/// Complex Ai, Ai' by the Maclaurin series; |z| <= 7, OutOfDomain beyond.
cplx airy_ai(cplx z);
cplx airy_ai_prime(cplx z);

/// sin(pi x) / (pi x) with value 1 at x = 0.
double sinc_pi(double x);
cplx sinc_pi(cplx z);

enum class SpecialId { SincPi, BesselJ, AiryAi, AiryAiPrime, Exp };

std::string to_string(SpecialId id);

/// Uniform entry point.  `alpha` is only read for BesselJ; complex arguments
/// are accepted by SincPi, AiryAi, AiryAiPrime and Exp.
cplx eval_special(SpecialId id, cplx x, double alpha = 0.0);

}  // namespace merostat::special
