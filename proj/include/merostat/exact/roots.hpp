#pragma once

// Roots of exact polynomials.  Exact roots in Q(i) and quadratic surds are
// recovered from numerically located roots by rounding and exact
// verification; anything that resists is returned as a certified numeric root.

#include <complex>
#include <optional>
#include <vector>

#include "merostat/exact/poly.hpp"
#include "merostat/exact/ratfunc.hpp"

namespace merostat::exact {

/// a + b * sqrt(d) with d not a square in Q(i).
struct QuadraticSurd {
  GaussianRational a;
  GaussianRational b;
  GaussianRational d;
};

struct RootInfo {
  std::complex<double> approx;
  int multiplicity = 1;
  std::optional<GaussianRational> exact;  ///< root lies in Q(i)
  std::optional<QuadraticSurd> surd;      ///< root of an exact quadratic factor
  /// Monic square-free factor of the input polynomial that this root belongs to.
  Poly<GaussianRational> factor;
  double residual = 0.0;  ///< |p(approx)| relative to the coefficient scale

  bool is_exact() const { return exact.has_value() || surd.has_value(); }
};

/// Numeric roots of a square-free polynomial (companion matrix eigenvalues
/// followed by Newton polishing in extended precision).
std::vector<std::complex<double>> numeric_roots(const Poly<GaussianRational>& p);

/// All roots with multiplicities.
std::vector<RootInfo> poly_roots(const Poly<GaussianRational>& p);
std::vector<RootInfo> poly_roots(const Poly<Rational>& p);

Poly<GaussianRational> to_gaussian(const Poly<Rational>& p);

struct RootsPoles {
  std::vector<RootInfo> zeros;
  std::vector<RootInfo> poles;
};

RootsPoles ratfunc_roots_poles(const RationalFunction& r);

/// Nearest rational with denominator at most max_den (continued fractions).
Rational rationalize(double x, long max_den = 1000000);

}  // namespace merostat::exact
