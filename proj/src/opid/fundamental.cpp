#include "merostat/opid/fundamental.hpp"

#include <cmath>

#include "merostat/error.hpp"
#include "merostat/numeric/lu.hpp"
#include "merostat/numeric/quadrature.hpp"

namespace merostat::opid {

using cplx = std::complex<double>;

Eigen::Matrix2cd J2() {
  Eigen::Matrix2cd j;
  j << 0.0, 1.0, 1.0, 0.0;
  return j;
}

namespace {

constexpr double kConditionLimit = 1e12;

}  // namespace

Eigen::Matrix2cd fundamental_solution_eval(const ConvolutionKernelSpec& k, double xi, cplx rho, int n_quad) {
  if (n_quad < 2) throw Error(ErrorCode::InvalidArgument, "n_quad must be at least 2");
  if (rho == cplx(0.0) || xi == 0.0) return Eigen::Matrix2cd::Identity();
  const cplx i(0.0, 1.0);
  const AccelerantSystem M = m_function(k);
  const numeric::Rule rule = numeric::gauss_legendre(n_quad, 0.0, xi);
  const int n = n_quad;

  // (I - rho A)^{-1} phi = phi + i rho int_0^x e^{i rho (x - t)} phi(t) dt.
  // For phi = 1 this is e^{i rho x}; for phi = M an inner rule on [0, x].
  Eigen::VectorXcd y1(n), y2(n);
  std::vector<double> m_at(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    const double x = rule.x[static_cast<size_t>(a)];
    m_at[static_cast<size_t>(a)] = M(x);
    const numeric::Rule inner = numeric::gauss_legendre(n_quad, 0.0, x);
    cplx acc = 0.0;
    for (int b = 0; b < n; ++b) {
      const double t = inner.x[static_cast<size_t>(b)];
      acc += inner.w[static_cast<size_t>(b)] * std::exp(i * rho * (x - t)) * M(t);
    }
    y1(a) = m_at[static_cast<size_t>(a)] + i * rho * acc;
    y2(a) = std::exp(i * rho * x);
  }

  Eigen::MatrixXcd S = Eigen::MatrixXcd::Identity(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      S(a, b) += rule.w[static_cast<size_t>(b)] * k(rule.x[static_cast<size_t>(a)] - rule.x[static_cast<size_t>(b)]);
  const numeric::ComplexLU lu(S);
  if (lu.singular() || lu.condition_estimate() > kConditionLimit)
    throw Error(ErrorCode::SingularOperator, "S_xi is singular at xi = " + std::to_string(xi));
  const Eigen::VectorXcd g1 = lu.solve(y1), g2 = lu.solve(y2);

  // Pi* g = ((g, M), (g, 1)); M is real.
  Eigen::Matrix2cd B;
  B.setZero();
  for (int a = 0; a < n; ++a) {
    const double w = rule.w[static_cast<size_t>(a)], m = m_at[static_cast<size_t>(a)];
    B(0, 0) += w * g1(a) * m;
    B(0, 1) += w * g2(a) * m;
    B(1, 0) += w * g1(a);
    B(1, 1) += w * g2(a);
  }
  return Eigen::Matrix2cd::Identity() + i * rho * J2() * B;
}

}  // namespace merostat::opid
