#include "merostat/opid/hamiltonian.hpp"

#include <cmath>

#include "merostat/error.hpp"

namespace merostat::opid {

using exact::Rational;
using RPoly = exact::Poly<Rational>;

cplx ExpKernelData::u(cplx x) const { return x + 1.0 / beta - std::sin(lambda * x) / lambda; }
cplx ExpKernelData::v(cplx x) const { return x + 1.0 / beta + std::sin(lambda * x) / lambda; }

HamiltonianH HamiltonianH::from_rational(RationalFunction h2) {
  if (h2.zero()) throw Error(ErrorCode::InvalidArgument, "h2 must not vanish identically");
  HamiltonianH h;
  h.h2_ = [h2](cplx xi) { return h2.eval_complex(xi); };
  h.h2_exact_ = std::move(h2);
  return h;
}

HamiltonianH HamiltonianH::from_exp_kernel(double beta, double lambda) {
  if (beta == 0.0) throw Error(ErrorCode::SingularAtZero, "beta must be nonzero");
  if (!(lambda > 0.0)) throw Error(ErrorCode::InvalidArgument, "lambda must be positive");
  HamiltonianH h;
  ExpKernelData e{beta, lambda};
  h.h2_ = [e](cplx xi) { return e.u(xi) / e.v(xi); };
  h.exp_ = e;
  return h;
}

Eigen::Matrix2cd HamiltonianH::H(cplx xi) const {
  const cplx q = Q(xi);
  Eigen::Matrix2cd m;
  m << q, 1.0, 1.0, 1.0 / q;
  return 0.5 * m;
}

std::optional<RationalFunction> HamiltonianH::Q_exact() const {
  if (!h2_exact_) return std::nullopt;
  return RationalFunction(1) / (RationalFunction(2) * *h2_exact_ * *h2_exact_);
}

std::optional<RationalFunction> HamiltonianH::r_core() const {
  if (!h2_exact_) return std::nullopt;
  return h2_exact_->scaled_argument(Rational(2)).reciprocal();
}

namespace {

/// The unique real root of the nondecreasing function f(y) = y + c + s sin(lambda y)/lambda
/// (s = +-1); it lies in [-c - 1/lambda, -c + 1/lambda].
double monotone_root(double c, double s, double lambda) {
  auto f = [&](double y) { return y + c + s * std::sin(lambda * y) / lambda; };
  double lo = -c - 1.0 / lambda - 1e-12, hi = -c + 1.0 / lambda + 1e-12;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0 ? lo : hi) = mid;
  }
  double y = 0.5 * (lo + hi);
  // Newton polish when the derivative is not degenerate.
  for (int it = 0; it < 3; ++it) {
    const double d = 1.0 + s * std::cos(lambda * y);
    if (std::abs(d) < 1e-8) break;
    y -= f(y) / d;
  }
  return y;
}

}  // namespace

spectral::MeromorphicHandle HamiltonianH::r_handle() const {
  if (h2_exact_) return spectral::MeromorphicHandle::rational(*r_core());
  if (!exp_) throw Error(ErrorCode::ExpansionUnavailable, "no series or closed form for r");
  const ExpKernelData e = *exp_;
  const double c = 1.0 / e.beta, lam = e.lambda;
  // With y = 2x: r = v(y) / (sqrt(2) u(y)).  Jets of f/g in y, then the chain rule.
  struct Fn {
    double c, lam, s;
    double v0(double y) const { return y + c + s * std::sin(lam * y) / lam; }
    double v1(double y) const { return 1.0 + s * std::cos(lam * y); }
    double v2(double y) const { return -s * lam * std::sin(lam * y); }
  };
  const Fn vf{c, lam, +1.0}, uf{c, lam, -1.0};
  auto quotient_jet = [](const Fn& top, const Fn& bot, double scale, double x) {
    const double y = 2.0 * x;
    const double f = top.v0(y), f1 = top.v1(y), f2 = top.v2(y);
    const double g = bot.v0(y), g1 = bot.v1(y), g2 = bot.v2(y);
    const double q = f / g;
    const double q1 = (f1 * g - f * g1) / (g * g);
    const double q2 = ((f2 * g - f * g2) * g - 2.0 * g1 * (f1 * g - f * g1)) / (g * g * g);
    return spectral::Jet{scale * q, 2.0 * scale * q1, 4.0 * scale * q2};
  };
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  auto r = [=](double x) { return quotient_jet(vf, uf, inv_sqrt2, x); };
  auto q = [=](double x) { return quotient_jet(uf, vf, std::sqrt(2.0), x); };
  const double root = 0.5 * monotone_root(c, +1.0, lam);
  const double pole = 0.5 * monotone_root(c, -1.0, lam);
  // u - v = -2 sin(lambda y)/lambda, so u and v share a root iff sin vanishes
  // at it; one of them then vanishes to third order and h2 has a double zero
  // or pole.  The simple one of the two roots is accurate, so test both.
  if (std::min(std::abs(std::sin(2.0 * lam * root)), std::abs(std::sin(2.0 * lam * pole))) < 1e-9)
    throw Error(ErrorCode::NonSimpleRoot, "u and v share the root y = " + std::to_string(2.0 * root) +
                                              "; h2 has a multiple zero or pole there");
  return spectral::MeromorphicHandle::callable(r, q, {root}, {pole});
}

HamiltonianH hamiltonian_from_h2(const RationalFunction& h2) { return HamiltonianH::from_rational(h2); }

HamiltonianH exp_kernel_h2(double beta, double lambda) { return HamiltonianH::from_exp_kernel(beta, lambda); }

Eigen::Matrix2cd exp_kernel_T(double beta, double lambda, double xi) {
  const cplx i(0.0, 1.0);
  const double s = std::sin(lambda * xi) / lambda;
  Eigen::Matrix2cd t;
  t << xi + 1.0 / beta, std::exp(-i * lambda * xi) * s, std::exp(i * lambda * xi) * s, xi + 1.0 / beta;
  return t;
}

}  // namespace merostat::opid
