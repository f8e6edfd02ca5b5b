#include "merostat/fredholm/ode_residual.hpp"

#include <cmath>
#include <numbers>

#include "merostat/error.hpp"
#include "merostat/fredholm/sigma.hpp"
#include "merostat/numeric/parallel.hpp"

namespace merostat::fredholm {

namespace {

std::vector<cplx> sample(const std::function<cplx(double)>& sigma, const std::vector<double>& pts) {
  std::vector<cplx> v(pts.size());
  numeric::parallel_for(pts.size(), [&](size_t i) { v[i] = sigma(pts[i]); });
  return v;
}

void fill_fd4(SigmaTrace& tr, const std::function<cplx(double)>& sigma, double a, double b, int n) {
  const double h = (b - a) / (n - 1);
  std::vector<double> pts(static_cast<size_t>(n) + 4);
  for (int i = 0; i < n + 4; ++i) pts[static_cast<size_t>(i)] = a + (i - 2) * h;
  const auto f = sample(sigma, pts);
  tr.order = 4;
  for (int i = 0; i < n; ++i) {
    const size_t j = static_cast<size_t>(i) + 2;
    tr.x.push_back(pts[j]);
    tr.sigma.push_back(f[j]);
    tr.d1.push_back((-f[j + 2] + 8.0 * f[j + 1] - 8.0 * f[j - 1] + f[j - 2]) / (12 * h));
    tr.d2.push_back((-f[j + 2] + 16.0 * f[j + 1] - 30.0 * f[j] + 16.0 * f[j - 1] - f[j - 2]) / (12 * h * h));
  }
}

/// Clenshaw evaluation of sum c_k T_k(y).
cplx clenshaw(const std::vector<cplx>& c, double y) {
  cplx b1 = 0, b2 = 0;
  for (size_t k = c.size(); k-- > 1;) {
    const cplx b0 = 2 * y * b1 - b2 + c[k];
    b2 = b1;
    b1 = b0;
  }
  return y * b1 - b2 + c[0];
}

/// Coefficients of d/dy sum c_k T_k.
std::vector<cplx> derivative_coefficients(const std::vector<cplx>& c) {
  const size_t d = c.size() - 1;
  std::vector<cplx> dc(c.size(), 0.0);
  if (d == 0) return dc;
  dc[d - 1] = 2.0 * static_cast<double>(d) * c[d];
  for (size_t k = d - 1; k >= 1; --k) {
    dc[k - 1] = (k + 1 <= d ? dc[k + 1] : 0.0) + 2.0 * static_cast<double>(k) * c[k];
  }
  dc[0] *= 0.5;
  return dc;
}

void fill_chebyshev(SigmaTrace& tr, const std::function<cplx(double)>& sigma, double a, double b, int n) {
  const int N = n - 1;
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  std::vector<double> y(static_cast<size_t>(n)), pts(static_cast<size_t>(n));
  for (int j = 0; j <= N; ++j) {
    y[static_cast<size_t>(j)] = -std::cos(std::numbers::pi * j / N);
    pts[static_cast<size_t>(j)] = mid + half * y[static_cast<size_t>(j)];
  }
  pts.front() = a;
  pts.back() = b;
  const auto f = sample(sigma, pts);
  // Interpolation coefficients on the Lobatto grid, then truncation.
  const int d = std::min(N, kChebyshevFitDegree);
  std::vector<cplx> c(static_cast<size_t>(d) + 1, 0.0);
  for (int k = 0; k <= d; ++k) {
    cplx s = 0;
    for (int j = 0; j <= N; ++j) {
      const double wj = (j == 0 || j == N) ? 0.5 : 1.0;
      s += wj * f[static_cast<size_t>(j)] * std::cos(std::numbers::pi * k * (N - j) / N);
    }
    c[static_cast<size_t>(k)] = s * (2.0 / N) * ((k == 0 || k == N) ? 0.5 : 1.0);
  }
  auto c1 = derivative_coefficients(c);
  auto c2 = derivative_coefficients(c1);
  tr.order = d;
  for (int j = 0; j <= N; ++j) {
    const double yj = y[static_cast<size_t>(j)];
    tr.x.push_back(pts[static_cast<size_t>(j)]);
    tr.sigma.push_back(f[static_cast<size_t>(j)]);
    tr.d1.push_back(clenshaw(c1, yj) / half);
    tr.d2.push_back(clenshaw(c2, yj) / (half * half));
  }
}

}  // namespace

std::string to_string(DiffScheme s) { return s == DiffScheme::FD4 ? "fd4" : "chebyshev"; }

SigmaTrace make_trace(const std::function<cplx(double)>& sigma, double a, double b, int n, DiffScheme scheme) {
  if (n < kMinTracePoints)
    throw Error(ErrorCode::GridTooCoarse, "sigma trace needs at least " + std::to_string(kMinTracePoints) + " points");
  if (!(a < b)) throw Error(ErrorCode::InvalidArgument, "trace interval must satisfy a < b");
  SigmaTrace tr;
  tr.scheme = scheme;
  if (scheme == DiffScheme::FD4)
    fill_fd4(tr, sigma, a, b, n);
  else
    fill_chebyshev(tr, sigma, a, b, n);
  return tr;
}

double ode_residual(SigmaTrace& tr, Equation which, double alpha) {
  if (static_cast<int>(tr.x.size()) < kMinTracePoints)
    throw Error(ErrorCode::GridTooCoarse, "ODE residual needs at least " + std::to_string(kMinTracePoints) + " points");
  const size_t n = tr.x.size();
  tr.residual.assign(n, 0.0);
  double worst = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double x = tr.x[i];
    const cplx s = tr.sigma[i], s1 = tr.d1[i], s2 = tr.d2[i];
    // Monomials of the expanded equation; the residual is their sum.
    std::vector<cplx> m;
    if (which == Equation::P5) {
      m = {x * x * s2 * s2, 4.0 * x * x * s1 * s1, -8.0 * x * s1 * s, 4.0 * s * s, 4.0 * x * s1 * s1 * s1, -4.0 * s * s1 * s1};
    } else {
      m = {x * x * s2 * s2, 4.0 * s * s1 * s1, -4.0 * x * s1 * s1 * s1, -s * s1, x * s1 * s1, -alpha * alpha * s1 * s1};
    }
    cplx sum = 0.0;
    double scale = 0.0;
    for (const cplx& v : m) {
      sum += v;
      scale = std::max(scale, std::abs(v));
    }
    tr.residual[i] = scale > 0.0 ? std::abs(sum) / scale : 0.0;
    worst = std::max(worst, tr.residual[i]);
  }
  return worst;
}

SigmaTrace p5_trace(double a, double b, int n, DiffScheme scheme, int n_quad) {
  return make_trace([n_quad](double x) { return sigma_p5(x, n_quad, P5Route::Bilinear); }, a, b, n, scheme);
}

SigmaTrace p3_trace(double alpha, double a, double b, int n, DiffScheme scheme, int n_quad) {
  return make_trace([alpha, n_quad](double s) { return cplx(sigma_p3(s, alpha, n_quad).sigma); }, a, b, n, scheme);
}

}  // namespace merostat::fredholm
