#pragma once

// Exact resolvent data for S_xi f = f + int_0^xi k(x - t) f(t) dt with an
// even polynomial kernel.  Writing k(x - t) = sum_s x^s p_s(t), the equation
// S_xi g = f reduces to the linear system A_xi c = ((f, p_j)_xi)_j with
//   A_xi[j][s] = delta_js + (x^s, p_j)_xi,
// and g = f - sum_s c_s x^s.  Every entry is a polynomial in xi, so Delta,
// h2 = g(xi, xi) for f = 1, and Gamma_xi(0, xi) are exact rational functions.

#include <vector>

#include "merostat/exact/matrix.hpp"
#include "merostat/exact/ratfunc.hpp"
#include "merostat/exact/roots.hpp"

namespace merostat::opid {

using exact::Poly;
using exact::Rational;
using exact::RationalFunction;
using RPoly = Poly<Rational>;

/// Largest kernel degree handled symbolically (A_xi is at most 9 x 9).
inline constexpr int kMaxSymbolicKernelDegree = 8;

struct ResolventBundle {
  RPoly kernel;
  std::vector<RPoly> p;          ///< p_s(t), s = 0..2m
  exact::Matrix<RPoly> A;        ///< A_xi with polynomial entries in xi
  RPoly delta;                   ///< det A_xi
  std::vector<RPoly> d;          ///< Cramer numerators d_s(xi) for f = 1
  RationalFunction h2;           ///< g(xi, xi) for f = 1
  RPoly D0_diagonal;             ///< D_0(xi, t) at t = xi
  RationalFunction gamma0;       ///< Gamma_xi(0, xi) = -D_0(xi, xi) / Delta
  RationalFunction h1_direct;    ///< (S_xi^{-1} M)(xi), computed independently of h2
  std::vector<exact::RootInfo> singular_points;  ///< roots of Delta
};

/// Throws InvalidArgument for odd kernels and DimensionTooLarge above degree 8.
ResolventBundle poly_kernel_resolvent(const RPoly& k);

/// h2' == Gamma0 h2 as exact rational functions.
bool gamma_log_derivative_check(const ResolventBundle& b);

/// Factor of den(f) whose roots are the simple poles of f with residue c:
/// gcd(den, num - c den').
RPoly residue_locus(const RationalFunction& f, const Rational& c);

/// Numeric resolvent kernel Gamma_xi(x, t) = -sum_s D_s(xi, t) x^s / Delta_xi.
double resolvent_kernel(const ResolventBundle& b, double xi, double x, double t);

}  // namespace merostat::opid
