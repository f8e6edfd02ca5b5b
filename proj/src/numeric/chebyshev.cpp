#include "merostat/numeric/chebyshev.hpp"

#include <cmath>
#include <numbers>

#include "merostat/error.hpp"

namespace merostat::numeric {

ChebyshevGrid chebyshev_grid(int n, double a, double b) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "Chebyshev grid needs n >= 1");
  ChebyshevGrid g;
  g.x.resize(n + 1);
  Eigen::VectorXd s(n + 1), c(n + 1);
  for (int j = 0; j <= n; ++j) {
    s(j) = -std::cos(std::numbers::pi * j / n);
    c(j) = (j == 0 || j == n ? 2.0 : 1.0) * (j % 2 ? -1.0 : 1.0);
    g.x(j) = 0.5 * (a + b) + 0.5 * (b - a) * s(j);
  }
  g.D.resize(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    double row = 0.0;
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      g.D(i, j) = (c(i) / c(j)) / (s(i) - s(j));
      row += g.D(i, j);
    }
    // Negative-sum trick for the diagonal keeps rows exact on constants.
    g.D(i, i) = -row;
  }
  g.D *= 2.0 / (b - a);
  return g;
}

double chebyshev_interpolate(const ChebyshevGrid& g, const Eigen::VectorXd& values, double t) {
  const int n = static_cast<int>(g.x.size()) - 1;
  double num = 0.0, den = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double d = t - g.x(j);
    if (d == 0.0) return values(j);
    const double w = (j == 0 || j == n ? 0.5 : 1.0) * (j % 2 ? -1.0 : 1.0) / d;
    num += w * values(j);
    den += w;
  }
  return num / den;
}

}  // namespace merostat::numeric
