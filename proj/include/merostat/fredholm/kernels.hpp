#pragma once

// Symmetric kernels k(x, t) of the integral operators
//   (S f)(x) = f(x) + int k(x, t) f(t) dt.
// The built-in families carry the coupling gamma inside k.

#include <complex>
#include <functional>
#include <string>
#include <variant>

namespace merostat::fredholm {

using cplx = std::complex<double>;

/// gamma sin(pi (x - t)) / (pi (x - t)); the diagonal is gamma.
struct SineKernel {
  double gamma = -1.0;
};

/// gamma (Ai(x) Ai'(t) - Ai'(x) Ai(t)) / (x - t); diagonal Ai'(x)^2 - x Ai(x)^2.
struct AiryKernel {
  double gamma = -1.0;
};

/// gamma (phi(x) psi(t) - phi(t) psi(x)) / (x - t) with phi(x) = J_alpha(sqrt x),
/// psi = x phi'.  Near the diagonal the equivalent form
/// (gamma / 4) int_0^1 phi(x s) phi(t s) ds is used with a 32-point rule.
struct BesselKernel {
  double gamma = -1.0;
  double alpha = 0.0;
};

/// Any analytic symmetric kernel.  `region` says whether the scale z of the
/// operator T(z) lies in the analyticity region; empty means the whole plane.
struct CustomKernel {
  std::function<cplx(cplx, cplx)> k;
  std::string name = "custom";
  std::function<bool(cplx)> region;
  bool real_on_reals = true;  ///< k(conj x, conj t) = conj k(x, t)
};

class SmoothKernel {
 public:
  using Variant = std::variant<SineKernel, AiryKernel, BesselKernel, CustomKernel>;

  /// Throws InvalidArgument for alpha <= -1 or an empty custom callable.
  explicit SmoothKernel(Variant v);

  static SmoothKernel sine(double gamma) { return SmoothKernel(SineKernel{gamma}); }
  static SmoothKernel airy(double gamma) { return SmoothKernel(AiryKernel{gamma}); }
  static SmoothKernel bessel(double gamma, double alpha) { return SmoothKernel(BesselKernel{gamma, alpha}); }
  static SmoothKernel custom(std::function<cplx(cplx, cplx)> k, std::string name = "custom",
                             std::function<bool(cplx)> region = {});

  const Variant& variant() const { return v_; }
  cplx operator()(cplx x, cplx t) const;
  /// Whether points c + z u, 0 <= u <= 1, are all admissible arguments.
  bool admits_segment(cplx c, cplx z) const;
  /// Real on the real axis; Schwarz symmetry of sigma relies on this.
  bool real_on_reals() const;
  std::string describe() const;

 private:
  Variant v_;
};

}  // namespace merostat::fredholm
