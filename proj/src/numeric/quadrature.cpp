#include "merostat/numeric/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "merostat/error.hpp"

namespace merostat::numeric {

namespace {

Rule build(int n) {
  Rule r;
  r.x.resize(static_cast<size_t>(n));
  r.w.resize(static_cast<size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi's initial guess, then Newton on P_n.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0, p1 = z;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n == 1 ? 1.0 : n * (z * p1 - p0) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    r.x[static_cast<size_t>(i)] = -z;
    r.x[static_cast<size_t>(n - 1 - i)] = z;
    r.w[static_cast<size_t>(i)] = w;
    r.w[static_cast<size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) r.x[static_cast<size_t>(n / 2)] = 0.0;
  return r;
}

}  // namespace

const Rule& gauss_legendre(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "quadrature order must be positive");
  static std::mutex mu;
  static std::map<int, Rule> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build(n)).first;
  return it->second;
}

Rule gauss_legendre(int n, double a, double b) {
  const Rule& ref = gauss_legendre(n);
  Rule r = ref;
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  for (int i = 0; i < n; ++i) {
    r.x[static_cast<size_t>(i)] = mid + half * ref.x[static_cast<size_t>(i)];
    r.w[static_cast<size_t>(i)] = half * ref.w[static_cast<size_t>(i)];
  }
  return r;
}

Rule composite_gauss_legendre(int n, int panels, double a, double b) {
  if (panels < 1) throw Error(ErrorCode::InvalidArgument, "need at least one panel");
  Rule out;
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const Rule r = gauss_legendre(n, a + p * h, a + (p + 1) * h);
    out.x.insert(out.x.end(), r.x.begin(), r.x.end());
    out.w.insert(out.w.end(), r.w.begin(), r.w.end());
  }
  return out;
}

double integrate(const std::function<double(double)>& f, double a, double b, int n) {
  const Rule r = gauss_legendre(n, a, b);
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += r.w[static_cast<size_t>(i)] * f(r.x[static_cast<size_t>(i)]);
  return s;
}

}  // namespace merostat::numeric
