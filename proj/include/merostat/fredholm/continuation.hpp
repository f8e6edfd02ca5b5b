#pragma once

// Analytic continuation of sigma(z, f, g) = (S_z^{-1} f, g)_z off the real
// axis.  Poles of sigma can only sit at zeros of D(z) = det(I + T(z)), so the
// probe locates those zeros (argument principle on sub-cells, then Newton) and
// tests each for a simple pole of sigma.

#include <vector>

#include "merostat/fredholm/operator.hpp"

namespace merostat::fredholm {

struct Rect {
  double re_min = 0.0, re_max = 1.0, im_min = 0.0, im_max = 0.0;
};

struct PoleCandidate {
  cplx z;
  int winding = 0;           ///< zeros of D counted in the enclosing cell
  bool converged = false;    ///< Newton on D reached |D| below tolerance
  double fit_r2 = 0.0;       ///< linear fit of 1/sigma around z
  bool simple = false;       ///< winding 1 and fit_r2 > 0.999
  cplx residue;              ///< (1 / 2 pi i) contour integral of sigma
};

struct ContinuationMap {
  int nx = 0, ny = 0;
  std::vector<cplx> z;      ///< row-major, nx * ny
  std::vector<cplx> sigma;  ///< NaN where the solve was NearSingular
  std::vector<cplx> det;
  std::vector<PoleCandidate> poles;
};

struct ProbeOptions {
  int nx = 21, ny = 11;          ///< sigma grid
  int cells_x = 4, cells_y = 2;  ///< argument-principle cells
  int n = 120;                   ///< quadrature order
};

/// Throws InvalidRegion when a grid point's segment [0, z] leaves G.
ContinuationMap analytic_continuation_probe(const SmoothKernel& k, const Rect& region, const Fn& f, const Fn& g,
                                            const ProbeOptions& opt = {});

/// Number of zeros of D inside the rectangle by the argument principle.
int zero_count(const SmoothKernel& k, const Rect& cell, int n);

/// Simple-pole diagnostics for sigma at z0: linear fit of 1/sigma on a ring
/// of radius r and the residue from a trapezoidal contour integral.
PoleCandidate pole_diagnostics(const SmoothKernel& k, cplx z0, const Fn& f, const Fn& g, int n, double r = 1e-3);

/// Real-axis scan: first sign change of D on (a, b), refined by bisection,
/// followed by pole diagnostics of sigma there.
struct RealScan {
  bool crossing_found = false;
  double xi_star = 0.0;
  PoleCandidate pole;
  std::vector<double> xi, det;  ///< the scan itself
};
RealScan real_determinant_scan(const SmoothKernel& k, double a, double b, const Fn& f, const Fn& g, int samples = 120,
                               int n = 120);

}  // namespace merostat::fredholm
