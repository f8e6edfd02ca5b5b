#pragma once

// W(xi, rho) = I + i rho J Pi* S_xi^{-1} P_xi (I - rho A)^{-1} Pi,
// evaluated with Gauss-Legendre Nystrom discretisation on [0, xi].

#include <complex>

#include <Eigen/Dense>

#include "merostat/opid/kernel_spec.hpp"

namespace merostat::opid {

/// J = [[0, 1], [1, 0]].
Eigen::Matrix2cd J2();

/// Throws SingularOperator when the discretised S_xi is singular or its
/// condition estimate exceeds 1e12 (xi at or next to a singular point).
Eigen::Matrix2cd fundamental_solution_eval(const ConvolutionKernelSpec& k, double xi, std::complex<double> rho,
                                           int n_quad = 80);

}  // namespace merostat::opid
