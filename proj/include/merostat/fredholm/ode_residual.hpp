#pragma once

// Sampled sigma functions and the residual of their sigma-form Painleve
// equations:
//   P5:        (x s'')^2 + 4 (x s' - s)(x s' - s + s'^2) = 0
//   P3(alpha): (x s'')^2 + s'(s - x s')(4 s' - 1) - alpha^2 s'^2 = 0
// The residual at each point is divided by the largest monomial of the
// expanded equation there.  The factored terms can all vanish on exact
// solutions (sigma = s/4 solves P3 with alpha = 0), the monomials cannot.

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace merostat::fredholm {

using cplx = std::complex<double>;

enum class DiffScheme {
  FD4,        ///< uniform grid, centred 5-point stencils, two ghost points per side
  Chebyshev,  ///< Chebyshev-Lobatto grid, derivatives of a truncated Chebyshev fit
};

enum class Equation { P5, P3 };

std::string to_string(DiffScheme s);

struct SigmaTrace {
  std::vector<double> x;
  std::vector<cplx> sigma, d1, d2;
  std::vector<double> residual;  ///< filled by ode_residual
  DiffScheme scheme = DiffScheme::FD4;
  int order = 4;  ///< stencil order (FD4) or fit degree (Chebyshev)
};

inline constexpr int kMinTracePoints = 64;
inline constexpr int kChebyshevFitDegree = 40;

/// Samples sigma on [a, b] with n grid points.  FD4 also evaluates two ghost
/// points beyond each end.  Evaluations run in parallel.  Throws
/// GridTooCoarse for n < 64 and InvalidArgument for a >= b.
SigmaTrace make_trace(const std::function<cplx(double)>& sigma, double a, double b, int n, DiffScheme scheme);

/// Max normalised residual; also stores the pointwise values in the trace.
double ode_residual(SigmaTrace& trace, Equation which, double alpha = 0.0);

/// Traces of the two transcendents (gamma = -1) with quadrature order n_quad.
SigmaTrace p5_trace(double a, double b, int n, DiffScheme scheme, int n_quad = 120);
SigmaTrace p3_trace(double alpha, double a, double b, int n, DiffScheme scheme, int n_quad = 120);

}  // namespace merostat::fredholm
