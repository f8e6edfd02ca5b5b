#pragma once

// Nystrom discretisation of S = I + T on the segment from c to c + z:
//   (T f)(c + z u) = z int_0^1 k(c + z u, c + z v) f(c + z v) dv,  0 <= u <= 1.
// With c = 0 and real z = xi this is S_xi on L^2(0, xi) rescaled to (0, 1);
// complex z gives the continuation T(z).  Gauss-Legendre nodes u_i, weights
// w_i, and the symmetric weighting sqrt(w_i) k sqrt(w_j) make det(I + T)
// approximate the Fredholm determinant directly.

#include <complex>
#include <functional>
#include <memory>

#include <Eigen/Dense>

#include "merostat/fredholm/kernels.hpp"
#include "merostat/numeric/lu.hpp"

namespace merostat::fredholm {

using Fn = std::function<cplx(cplx)>;

/// Condition number above which solves throw NearSingular.
inline constexpr double kNearSingularCondition = 1e12;

struct DiscretizedOperator {
  SmoothKernel kernel;
  cplx c{0.0};
  cplx z{1.0};
  std::vector<double> u, w;  ///< rule on (0, 1)
  std::vector<cplx> nodes;   ///< c + z u_i
  Eigen::MatrixXcd T;        ///< z sqrt(w_i) k(x_i, x_j) sqrt(w_j)
  std::shared_ptr<const numeric::ComplexLU> lu;  ///< factorisation of I + T

  int size() const { return static_cast<int>(u.size()); }
  Eigen::MatrixXcd system() const;
  double condition() const { return lu->condition_estimate(); }
};

/// Operator on (0, z).  Throws InvalidArgument for n < 8 and InvalidRegion
/// when the segment leaves the kernel's analyticity region.
DiscretizedOperator nystrom_build(const SmoothKernel& k, cplx z, int n);
/// Operator on the segment from c to c + z.
DiscretizedOperator nystrom_build(const SmoothKernel& k, cplx c, cplx z, int n);

/// det(I + T).  Never throws; a zero determinant is a legitimate value.
cplx fredholm_det(const DiscretizedOperator& op);

/// Solution y of S y = f, available at the nodes and, through the Nystrom
/// interpolant y(x) = f(x) - int k(x, t) y(t) dt, anywhere on the segment.
class NystromSolution {
 public:
  NystromSolution(const DiscretizedOperator& op, Fn f);

  const Eigen::VectorXcd& at_nodes() const { return y_; }
  /// y(c + z u).
  cplx at(double u) const;

 private:
  const DiscretizedOperator* op_;
  Fn f_;
  Eigen::VectorXcd y_;
};

/// (S^{-1} f, g) = int y(x) g*(x) dx along the segment, where
/// g*(x) = conj(g(conj x)).  On a real segment this is the L^2 inner product;
/// for complex z it is its analytic continuation.  Throws NearSingular when
/// the condition estimate exceeds 1e12.
cplx resolvent_bilinear(const DiscretizedOperator& op, const Fn& f, const Fn& g);

/// Resolvent kernel Gamma(x, t) of S^{-1} = I + Gamma at x = c + z ux,
/// t = c + z ut.  Gamma(., t) = -S^{-1} k(., t).
cplx resolvent_kernel(const DiscretizedOperator& op, double ux, double ut);

/// Throws NearSingular when the operator is too close to singular.
void require_well_conditioned(const DiscretizedOperator& op);

}  // namespace merostat::fredholm
