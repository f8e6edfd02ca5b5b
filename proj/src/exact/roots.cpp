#include "merostat/exact/roots.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace merostat::exact {

namespace {

using cld = std::complex<long double>;

std::vector<cld> coeffs_ld(const Poly<GaussianRational>& p) {
  std::vector<cld> c;
  c.reserve(p.coeffs().size());
  for (const auto& z : p.coeffs()) {
    // Convert via mpf-free route: num/den in long double keeps ~19 digits.
    auto ld = [](const Rational& q) {
      return static_cast<long double>(q.get_num().get_d()) / static_cast<long double>(q.get_den().get_d());
    };
    c.emplace_back(ld(z.re()), ld(z.im()));
  }
  return c;
}

cld horner(const std::vector<cld>& c, cld z, cld* deriv) {
  cld v = 0, d = 0;
  for (size_t k = c.size(); k-- > 0;) {
    d = d * z + v;
    v = v * z + c[k];
  }
  if (deriv) *deriv = d;
  return v;
}

double coeff_scale(const Poly<GaussianRational>& p) {
  double s = 0.0;
  for (const auto& z : p.coeffs()) s = std::max(s, std::abs(z.to_complex()));
  return s > 0.0 ? s : 1.0;
}

double relative_residual(const Poly<GaussianRational>& p, std::complex<double> z) {
  auto c = coeffs_ld(p);
  cld v = horner(c, cld(z.real(), z.imag()), nullptr);
  double zs = std::max(1.0, std::pow(std::abs(z), p.degree()));
  return static_cast<double>(std::abs(v)) / (coeff_scale(p) * zs);
}

GaussianRational rationalize_complex(std::complex<double> z) {
  return GaussianRational(rationalize(z.real()), rationalize(z.imag()));
}

/// Exact roots of a monic quadratic x^2 + b x + c.
std::vector<RootInfo> solve_quadratic(const Poly<GaussianRational>& q) {
  const GaussianRational b = q.coeff(1) / q.lead();
  const GaussianRational c = q.coeff(0) / q.lead();
  const GaussianRational disc = b * b - GaussianRational(4) * c;
  std::vector<RootInfo> out;
  const GaussianRational half(Rational(1, 2));
  if (auto s = exact_sqrt(disc)) {
    for (int sign : {1, -1}) {
      RootInfo r;
      r.exact = (-b + GaussianRational(sign) * *s) * half;
      r.approx = r.exact->to_complex();
      r.factor = Poly<GaussianRational>(std::vector<GaussianRational>{-*r.exact, GaussianRational(1)});
      out.push_back(std::move(r));
    }
    return out;
  }
  const std::complex<double> sd = std::sqrt(disc.to_complex());
  for (int sign : {1, -1}) {
    RootInfo r;
    r.surd = QuadraticSurd{-b * half, GaussianRational(sign) * half, disc};
    r.approx = (-b.to_complex() + static_cast<double>(sign) * sd) * 0.5;
    r.factor = monic(q);
    out.push_back(std::move(r));
  }
  return out;
}

/// Roots of a square-free polynomial.
std::vector<RootInfo> squarefree_roots(const Poly<GaussianRational>& f) {
  std::vector<RootInfo> out;
  if (f.degree() <= 0) return out;
  if (f.degree() == 1) {
    RootInfo r;
    r.exact = -f.coeff(0) / f.lead();
    r.approx = r.exact->to_complex();
    r.factor = monic(f);
    out.push_back(std::move(r));
    return out;
  }
  if (f.degree() == 2) return solve_quadratic(f);

  Poly<GaussianRational> rest = monic(f);
  auto approx = numeric_roots(rest);
  std::vector<bool> used(approx.size(), false);

  // Linear factors over Q(i).
  for (size_t k = 0; k < approx.size(); ++k) {
    GaussianRational c = rationalize_complex(approx[k]);
    if (!is_zero(rest(c))) continue;
    RootInfo r;
    r.exact = c;
    r.approx = c.to_complex();
    r.factor = Poly<GaussianRational>(std::vector<GaussianRational>{-c, GaussianRational(1)});
    rest = exact_div(rest, r.factor);
    used[k] = true;
    out.push_back(std::move(r));
  }
  // Quadratic factors over Q(i), guided by pairs of numeric roots.
  for (size_t i = 0; i < approx.size() && rest.degree() > 2; ++i) {
    if (used[i]) continue;
    for (size_t j = i + 1; j < approx.size(); ++j) {
      if (used[j]) continue;
      const auto s = approx[i] + approx[j];
      const auto p = approx[i] * approx[j];
      Poly<GaussianRational> cand(std::vector<GaussianRational>{rationalize_complex(p), -rationalize_complex(s), GaussianRational(1)});
      auto [quo, rem] = divmod(rest, cand);
      if (!rem.zero()) continue;
      rest = quo;
      used[i] = used[j] = true;
      for (auto& r : solve_quadratic(cand)) out.push_back(std::move(r));
      break;
    }
  }
  if (rest.degree() == 2) {
    for (auto& r : solve_quadratic(rest)) out.push_back(std::move(r));
  } else if (rest.degree() >= 1) {
    for (size_t k = 0; k < approx.size(); ++k) {
      if (used[k]) continue;
      // Skip numeric roots consumed by the quadratic solve above.
      RootInfo r;
      r.approx = approx[k];
      r.factor = rest;
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace

Rational rationalize(double x, long max_den) {
  if (!std::isfinite(x)) return Rational(0);
  if (std::abs(x) > 1e15) return Rational(x);
  // Continued-fraction convergents p/q.
  BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = x;
  for (int it = 0; it < 64; ++it) {
    const double a = std::floor(r);
    BigInt ai(a);
    BigInt p2 = ai * p1 + p0;
    BigInt q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double frac = r - a;
    if (std::abs(frac) < 1e-14) break;
    r = 1.0 / frac;
    if (std::abs(x - p1.get_d() / q1.get_d()) <= 1e-15 * std::max(1.0, std::abs(x))) break;
  }
  if (q1 == 0) return Rational(x);
  Rational out(p1, q1);
  out.canonicalize();
  return out;
}

Poly<GaussianRational> to_gaussian(const Poly<Rational>& p) {
  std::vector<GaussianRational> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c.emplace_back(q);
  return Poly<GaussianRational>(std::move(c));
}

std::vector<std::complex<double>> numeric_roots(const Poly<GaussianRational>& p) {
  const int d = p.degree();
  std::vector<std::complex<double>> out;
  if (d <= 0) return out;
  auto c = coeffs_ld(p);
  const cld lead = c.back();
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    cld v = -c[static_cast<size_t>(d - 1 - j)] / lead;
    comp(0, j) = std::complex<double>(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  }
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  const auto& ev = es.eigenvalues();
  for (int k = 0; k < d; ++k) {
    cld z(ev[k].real(), ev[k].imag());
    for (int it = 0; it < 12; ++it) {
      cld dp;
      cld v = horner(c, z, &dp);
      if (std::abs(dp) == 0) break;
      cld step = v / dp;
      z -= step;
      if (std::abs(step) <= 1e-19L * std::max<long double>(1, std::abs(z))) break;
    }
    out.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  std::sort(out.begin(), out.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

std::vector<RootInfo> poly_roots(const Poly<GaussianRational>& p) {
  std::vector<RootInfo> out;
  if (p.degree() <= 0) return out;
  auto parts = squarefree_decomposition(p);
  for (size_t i = 0; i < parts.size(); ++i) {
    for (auto& r : squarefree_roots(parts[i])) {
      r.multiplicity = static_cast<int>(i) + 1;
      r.residual = relative_residual(p, r.approx);
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<RootInfo> poly_roots(const Poly<Rational>& p) { return poly_roots(to_gaussian(p)); }

RootsPoles ratfunc_roots_poles(const RationalFunction& r) {
  RootsPoles out;
  out.zeros = poly_roots(r.num());
  out.poles = poly_roots(r.den());
  return out;
}

}  // namespace merostat::exact
