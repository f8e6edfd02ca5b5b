#pragma once

// Gauss-Legendre rules.  Nodes come from Newton iteration on the Legendre
// three-term recurrence and are cached per order.

#include <functional>
#include <vector>

namespace merostat::numeric {

struct Rule {
  std::vector<double> x;
  std::vector<double> w;
  int size() const { return static_cast<int>(x.size()); }
};

/// n-point rule on [-1, 1].
const Rule& gauss_legendre(int n);
/// n-point rule mapped to [a, b].
Rule gauss_legendre(int n, double a, double b);

/// Composite rule: `panels` equal panels of n points each on [a, b].
Rule composite_gauss_legendre(int n, int panels, double a, double b);

/// Integral of f over [a, b] with an n-point rule.
double integrate(const std::function<double(double)>& f, double a, double b, int n = 32);

}  // namespace merostat::numeric
