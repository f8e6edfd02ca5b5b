#pragma once

// Systems W' = (P(x) + rho Q(x)) W with first-order poles in P and Q.  A
// strong regular solution for every rho forces the residue pencil
// p_{-1} + rho q_{-1} to have integer eigenvalues that do not move with rho.

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "merostat/singular/laurent.hpp"

namespace merostat::spectral {

using exact::ExactMatrix;
using exact::GaussianRational;
using singular::LaurentMatrix;

/// Coefficients p_k, q_k of P and Q for k = low, low + 1, ...
struct MatrixPencil {
  int low = -1;
  std::vector<ExactMatrix> p;
  std::vector<ExactMatrix> q;

  int size() const { return p.empty() ? 0 : p.front().rows(); }
  /// Throws InvalidArgument when shapes disagree.
  void validate() const;
  /// P + rho Q as a terminating Laurent series.
  LaurentMatrix at(const GaussianRational& rho) const;
};

struct PencilSample {
  GaussianRational rho;
  std::vector<std::complex<double>> eigenvalues;
};

struct PencilReport {
  bool passes = false;
  /// Every coefficient of det(lambda I - p_{-1} - rho q_{-1}) is free of rho.
  bool rho_free = false;
  bool integer_spectrum = false;
  /// Eigenvalues of p_{-1} with multiplicity (meaningful when rho_free).
  std::vector<std::complex<double>> spectrum;
  std::vector<PencilSample> samples;
  std::string detail;
};

/// Exact decision: the characteristic polynomial is formed with rho as a
/// polynomial variable.  The samples are evaluated and reported as a cross-check.
PencilReport pencil_integer_check(const MatrixPencil& pencil, const std::vector<GaussianRational>& rho_samples);

/// Floating-point variant for residues without exact entries.  Needs at least
/// three distinct samples; eigenvalues are matched to integers and across
/// samples to tolerance `tol` (relative to the matrix scale).
PencilReport pencil_integer_check_numeric(const Eigen::MatrixXcd& pm1, const Eigen::MatrixXcd& qm1,
                                          const std::vector<std::complex<double>>& rho_samples,
                                          double tol = 1e-9);

}  // namespace merostat::spectral
