#pragma once

// Even/odd splitting of the sine-kernel operator on the symmetric interval
// (-t, t).  With k_+-(x, y) = (k(x, y) +- k(-x, y)) / 2 the operator decouples
// on even and odd functions, and restricting to (0, t) gives the kernels
// k(x - y) +- k(x + y).  Then D = D_+ D_- and D_- / D_+ = h_2(2t), where
// h_2(xi) = 1 + int_0^xi Gamma_xi(xi, y) dy = (S_xi^{-1} 1)(xi).

#include "merostat/fredholm/operator.hpp"

namespace merostat::fredholm {

struct ParitySplit {
  double D = 1.0;        ///< det S_t on (-t, t), computed as det S~_{2t} on (0, 2t)
  double D_plus = 1.0;   ///< even part, kernel k(x - y) + k(x + y) on (0, t)
  double D_minus = 1.0;  ///< odd part, kernel k(x - y) - k(x + y) on (0, t)
  double ratio = 1.0;    ///< D_- / D_+
  double h2 = 1.0;       ///< (S~_{2t}^{-1} 1)(2t), independent of the determinants
};

ParitySplit parity_split(double gamma, double t, int n);

/// h_2(xi) = (S_xi^{-1} 1)(xi) for the sine kernel with coupling gamma.
double sine_kernel_h2(double gamma, double xi, int n);

/// Largest singular value of the discretised T_xi for the Bessel kernel.
struct NormBound {
  double norm = 0.0;
  bool bound_ok = true;  ///< norm <= |gamma| + 1e-8
};
NormBound bessel_norm_bound(double gamma, double alpha, double xi, int n);

}  // namespace merostat::fredholm
