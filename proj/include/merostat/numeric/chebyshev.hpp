#pragma once

// Chebyshev points of the second kind and the spectral differentiation matrix
// on an interval.

#include <Eigen/Dense>

namespace merostat::numeric {

struct ChebyshevGrid {
  Eigen::VectorXd x;  ///< n + 1 points, increasing
  Eigen::MatrixXd D;  ///< d/dx on the grid
};

ChebyshevGrid chebyshev_grid(int n, double a, double b);

/// Barycentric interpolation of grid values at a point.
double chebyshev_interpolate(const ChebyshevGrid& g, const Eigen::VectorXd& values, double t);

}  // namespace merostat::numeric
