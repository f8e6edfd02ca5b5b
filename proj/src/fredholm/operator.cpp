#include "merostat/fredholm/operator.hpp"

#include <cmath>
#include <sstream>

#include "merostat/error.hpp"
#include "merostat/numeric/parallel.hpp"
#include "merostat/numeric/quadrature.hpp"
#include "merostat/simd/kernels.hpp"

namespace merostat::fredholm {

Eigen::MatrixXcd DiscretizedOperator::system() const {
  return Eigen::MatrixXcd::Identity(size(), size()) + T;
}

DiscretizedOperator nystrom_build(const SmoothKernel& k, cplx z, int n) { return nystrom_build(k, cplx(0.0), z, n); }

DiscretizedOperator nystrom_build(const SmoothKernel& k, cplx c, cplx z, int n) {
  if (n < 8) throw Error(ErrorCode::InvalidArgument, "Nystrom order must be at least 8");
  if (!k.admits_segment(c, z)) {
    std::ostringstream os;
    os << "segment from " << c << " to " << c + z << " leaves the analyticity region of " << k.describe();
    throw Error(ErrorCode::InvalidRegion, os.str());
  }
  DiscretizedOperator op{k, c, z, {}, {}, {}, {}, {}};
  const auto& r = numeric::gauss_legendre(n);
  op.u.resize(static_cast<size_t>(n));
  op.w.resize(static_cast<size_t>(n));
  op.nodes.resize(static_cast<size_t>(n));
  std::vector<double> sw(static_cast<size_t>(n));
  for (size_t i = 0; i < static_cast<size_t>(n); ++i) {
    op.u[i] = 0.5 * (r.x[i] + 1.0);
    op.w[i] = 0.5 * r.w[i];
    op.nodes[i] = c + z * op.u[i];
    sw[i] = std::sqrt(op.w[i]);
  }
  op.T.resize(n, n);
  // Symmetric kernel: fill the upper triangle, one row per task.
  numeric::parallel_for(static_cast<size_t>(n), [&](size_t i) {
    for (size_t j = i; j < static_cast<size_t>(n); ++j) {
      const cplx v = z * sw[i] * k(op.nodes[i], op.nodes[j]) * sw[j];
      op.T(static_cast<long>(i), static_cast<long>(j)) = v;
    }
  });
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) op.T(i, j) = op.T(j, i);
  op.lu = std::make_shared<numeric::ComplexLU>(op.system());
  return op;
}

cplx fredholm_det(const DiscretizedOperator& op) { return op.lu->determinant(); }

void require_well_conditioned(const DiscretizedOperator& op) {
  const double kappa = op.condition();
  if (!(kappa <= kNearSingularCondition)) {
    std::ostringstream os;
    os << "I + T(z) at z = " << op.z << " has condition estimate " << kappa << " (near a pole of sigma)";
    throw Error(ErrorCode::NearSingular, os.str());
  }
}

NystromSolution::NystromSolution(const DiscretizedOperator& op, Fn f) : op_(&op), f_(std::move(f)) {
  require_well_conditioned(op);
  const int n = op.size();
  std::vector<cplx> rhs(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) rhs[static_cast<size_t>(i)] = std::sqrt(op.w[static_cast<size_t>(i)]) * f_(op.nodes[static_cast<size_t>(i)]);
  const auto v = op.lu->solve(std::move(rhs));
  y_.resize(n);
  for (int i = 0; i < n; ++i) y_(i) = v[static_cast<size_t>(i)] / std::sqrt(op.w[static_cast<size_t>(i)]);
}

cplx NystromSolution::at(double u) const {
  const auto& op = *op_;
  const cplx x = op.c + op.z * u;
  const int n = op.size();
  std::vector<cplx> kx(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) kx[static_cast<size_t>(j)] = op.kernel(x, op.nodes[static_cast<size_t>(j)]);
  const cplx s = simd::active_kernels().zwdotu(static_cast<size_t>(n), op.w.data(), kx.data(), y_.data());
  return f_(x) - op.z * s;
}

cplx resolvent_bilinear(const DiscretizedOperator& op, const Fn& f, const Fn& g) {
  const NystromSolution y(op, f);
  const int n = op.size();
  std::vector<cplx> gs(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) gs[static_cast<size_t>(i)] = std::conj(g(std::conj(op.nodes[static_cast<size_t>(i)])));
  return op.z * simd::active_kernels().zwdotu(static_cast<size_t>(n), op.w.data(), y.at_nodes().data(), gs.data());
}

cplx resolvent_kernel(const DiscretizedOperator& op, double ux, double ut) {
  const cplx t = op.c + op.z * ut;
  const SmoothKernel& k = op.kernel;
  const NystromSolution y(op, [&k, t](cplx x) { return k(x, t); });
  return -y.at(ux);
}

}  // namespace merostat::fredholm
