#include "merostat/fredholm/kernels.hpp"

#include <cmath>
#include <sstream>

#include "merostat/error.hpp"
#include "merostat/numeric/quadrature.hpp"
#include "merostat/special/functions.hpp"

namespace merostat::fredholm {

namespace {

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

constexpr double kAiryComplexRadius = 7.0;

cplx airy_kernel(const AiryKernel& a, cplx x, cplx t) {
  const cplx d = x - t;
  if (std::abs(d) < 2e-3) {
    // Expansion about the midpoint m with x, t = m +- h:
    //   K = Ai'(m)^2 - m Ai(m)^2 + h^2 (2/3 Ai Ai' + 4/3 m Ai'^2 - 4/3 m^2 Ai^2) / 2 + O(h^4).
    const cplx m = 0.5 * (x + t), h = 0.5 * d;
    const cplx A = special::airy_ai(m), Ap = special::airy_ai_prime(m);
    const cplx c3 = 2.0 / 3.0 * A * Ap + 4.0 / 3.0 * m * Ap * Ap - 4.0 / 3.0 * m * m * A * A;
    return a.gamma * (Ap * Ap - m * A * A + 0.5 * c3 * h * h);
  }
  return a.gamma * (special::airy_ai(x) * special::airy_ai_prime(t) - special::airy_ai_prime(x) * special::airy_ai(t)) / d;
}

double bessel_kernel(const BesselKernel& b, double x, double t) {
  if (std::fabs(x - t) < 0.05) {
    const auto& r = numeric::gauss_legendre(32);
    double s = 0.0;
    for (int i = 0; i < r.size(); ++i) {
      const double u = 0.5 * (r.x[static_cast<size_t>(i)] + 1.0);
      s += r.w[static_cast<size_t>(i)] * special::bessel_phi(b.alpha, x * u) * special::bessel_phi(b.alpha, t * u);
    }
    return b.gamma * 0.125 * s;  // 1/4 from the kernel, 1/2 from mapping [-1, 1] to [0, 1]
  }
  const double num = special::bessel_phi(b.alpha, x) * special::bessel_psi(b.alpha, t) -
                     special::bessel_phi(b.alpha, t) * special::bessel_psi(b.alpha, x);
  return b.gamma * num / (x - t);
}

}  // namespace

SmoothKernel::SmoothKernel(Variant v) : v_(std::move(v)) {
  if (const auto* b = std::get_if<BesselKernel>(&v_); b && !(b->alpha > -1.0))
    throw Error(ErrorCode::InvalidArgument, "Bessel kernel needs alpha > -1");
  if (const auto* c = std::get_if<CustomKernel>(&v_); c && !c->k)
    throw Error(ErrorCode::InvalidArgument, "custom kernel needs a callable");
}

SmoothKernel SmoothKernel::custom(std::function<cplx(cplx, cplx)> k, std::string name, std::function<bool(cplx)> region) {
  return SmoothKernel(CustomKernel{std::move(k), std::move(name), std::move(region), true});
}

cplx SmoothKernel::operator()(cplx x, cplx t) const {
  return std::visit(overloaded{
                        [&](const SineKernel& s) { return s.gamma * special::sinc_pi(x - t); },
                        [&](const AiryKernel& a) { return airy_kernel(a, x, t); },
                        [&](const BesselKernel& b) {
                          if (x.imag() != 0.0 || t.imag() != 0.0 || x.real() < 0.0 || t.real() < 0.0)
                            throw Error(ErrorCode::InvalidRegion, "Bessel kernel is evaluated on [0, inf) only");
                          return cplx(bessel_kernel(b, x.real(), t.real()));
                        },
                        [&](const CustomKernel& c) { return c.k(x, t); },
                    },
                    v_);
}

bool SmoothKernel::admits_segment(cplx c, cplx z) const {
  return std::visit(overloaded{
                        [&](const SineKernel&) { return true; },
                        [&](const AiryKernel&) {
                          const bool real = c.imag() == 0.0 && z.imag() == 0.0;
                          return real || (std::abs(c) <= kAiryComplexRadius && std::abs(c + z) <= kAiryComplexRadius);
                        },
                        [&](const BesselKernel&) { return c.imag() == 0.0 && z.imag() == 0.0 && c.real() >= 0.0 && (c + z).real() >= 0.0; },
                        [&](const CustomKernel& k) { return !k.region || (k.region(c) && k.region(c + z)); },
                    },
                    v_);
}

bool SmoothKernel::real_on_reals() const {
  if (const auto* c = std::get_if<CustomKernel>(&v_)) return c->real_on_reals;
  return true;
}

std::string SmoothKernel::describe() const {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const SineKernel& s) { os << "sine(gamma=" << s.gamma << ")"; },
                 [&](const AiryKernel& a) { os << "airy(gamma=" << a.gamma << ")"; },
                 [&](const BesselKernel& b) { os << "bessel(gamma=" << b.gamma << ", alpha=" << b.alpha << ")"; },
                 [&](const CustomKernel& c) { os << c.name; },
             },
             v_);
  return os.str();
}

}  // namespace merostat::fredholm
