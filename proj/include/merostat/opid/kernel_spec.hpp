#pragma once

// Even, real convolution kernels k(x - t) on [0, a] and the accelerant
// M(x) = int_0^x k(u) du + 1/2 that enters the operator identity
//   A S - S A* = i (Phi_1 Phi_2* + Phi_2 Phi_1*),  Phi_1 g = M g,  Phi_2 g = g.

#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "merostat/exact/poly.hpp"

namespace merostat::opid {

using exact::Poly;
using exact::Rational;

struct EvenPolynomialKernel {
  Poly<Rational> k;
};

/// k(x) = beta (e^{i lambda x} + e^{-i lambda x}) = 2 beta cos(lambda x).
struct ExponentialKernel {
  double beta = 1.0;
  double lambda = 1.0;
};

/// k(x) = gamma sin(pi x) / (pi x).
struct SincKernel {
  double gamma = 1.0;
};

class ConvolutionKernelSpec {
 public:
  using Variant = std::variant<EvenPolynomialKernel, ExponentialKernel, SincKernel>;

  /// Throws InvalidArgument for odd polynomial parts, beta = 0, lambda <= 0 or a <= 0.
  ConvolutionKernelSpec(Variant v, double a = 1.0);

  static ConvolutionKernelSpec even_polynomial(Poly<Rational> k, double a = 1.0);
  static ConvolutionKernelSpec exponential(double beta, double lambda, double a = 1.0);
  static ConvolutionKernelSpec sinc(double gamma, double a = 1.0);

  const Variant& variant() const { return v_; }
  double a() const { return a_; }
  double operator()(double x) const;
  std::string describe() const;

 private:
  Variant v_;
  double a_;
};

struct AccelerantSystem {
  /// Exact M for polynomial kernels.
  std::optional<Poly<Rational>> exact;
  std::function<double(double)> M;

  double operator()(double x) const { return M(x); }
};

AccelerantSystem m_function(const ConvolutionKernelSpec& k);

/// Si(x) = int_0^x sin(t)/t dt.
double sine_integral(double x);

}  // namespace merostat::opid
