#include "merostat/numeric/lu.hpp"

#include <cmath>
#include <limits>

#include "merostat/error.hpp"
#include "merostat/simd/kernels.hpp"

namespace merostat::numeric {

ComplexLU::ComplexLU(const Eigen::MatrixXcd& a) : n_(static_cast<int>(a.rows())) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::InvalidArgument, "LU needs a square matrix");
  const auto& k = simd::active_kernels();
  const size_t n = static_cast<size_t>(n_);
  lu_.resize(n * n);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) lu_[static_cast<size_t>(i) * n + j] = a(i, j);
  for (int j = 0; j < n_; ++j) norm1_ = std::max(norm1_, a.col(j).cwiseAbs().sum());
  perm_.resize(n);
  for (int i = 0; i < n_; ++i) perm_[static_cast<size_t>(i)] = i;

  for (int c = 0; c < n_; ++c) {
    int p = c;
    double best = std::abs(lu_[static_cast<size_t>(c) * n + c]);
    for (int r = c + 1; r < n_; ++r) {
      const double v = std::abs(lu_[static_cast<size_t>(r) * n + c]);
      if (v > best) best = v, p = r;
    }
    if (best == 0.0) {
      singular_ = true;
      continue;
    }
    if (p != c) {
      std::swap_ranges(lu_.begin() + static_cast<long>(p * n), lu_.begin() + static_cast<long>((p + 1) * n),
                       lu_.begin() + static_cast<long>(c * n));
      std::swap(perm_[static_cast<size_t>(p)], perm_[static_cast<size_t>(c)]);
      ++swaps_;
    }
    const cplx inv_pivot = 1.0 / lu_[static_cast<size_t>(c) * n + c];
    const cplx* pivot_row = &lu_[static_cast<size_t>(c) * n + c + 1];
    const size_t len = n - static_cast<size_t>(c) - 1;
    for (int r = c + 1; r < n_; ++r) {
      cplx* row = &lu_[static_cast<size_t>(r) * n];
      const cplx f = row[c] * inv_pivot;
      row[c] = f;
      if (f != cplx(0.0)) k.zrow_update(len, f, pivot_row, row + c + 1);
    }
  }
}

std::vector<cplx> ComplexLU::solve(std::vector<cplx> b) const {
  if (static_cast<int>(b.size()) != n_) throw Error(ErrorCode::InvalidArgument, "right-hand side has wrong length");
  if (singular_) throw Error(ErrorCode::SingularOperator, "matrix is singular");
  const auto& k = simd::active_kernels();
  const size_t n = static_cast<size_t>(n_);
  std::vector<cplx> y(n);
  for (size_t i = 0; i < n; ++i) y[i] = b[static_cast<size_t>(perm_[i])];
  for (size_t i = 1; i < n; ++i) y[i] -= k.zdotu(i, &lu_[i * n], y.data());
  for (size_t i = n; i-- > 0;) {
    const cplx s = k.zdotu(n - i - 1, &lu_[i * n + i + 1], &y[i + 1]);
    y[i] = (y[i] - s) / lu_[i * n + i];
  }
  return y;
}

Eigen::VectorXcd ComplexLU::solve(const Eigen::VectorXcd& b) const {
  std::vector<cplx> v(b.data(), b.data() + b.size());
  v = solve(std::move(v));
  return Eigen::Map<Eigen::VectorXcd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

std::vector<cplx> ComplexLU::solve_adjoint(std::vector<cplx> b) const {
  // A = P^T L U, so A^H x = b becomes U^H L^H (P x) = b.
  if (singular_) throw Error(ErrorCode::SingularOperator, "matrix is singular");
  const size_t n = static_cast<size_t>(n_);
  for (size_t i = 0; i < n; ++i) {
    cplx s = b[i];
    for (size_t j = 0; j < i; ++j) s -= std::conj(lu_[j * n + i]) * b[j];
    b[i] = s / std::conj(lu_[i * n + i]);
  }
  for (size_t i = n; i-- > 0;) {
    cplx s = b[i];
    for (size_t j = i + 1; j < n; ++j) s -= std::conj(lu_[j * n + i]) * b[j];
    b[i] = s;
  }
  std::vector<cplx> x(n);
  for (size_t i = 0; i < n; ++i) x[static_cast<size_t>(perm_[i])] = b[i];
  return x;
}

cplx ComplexLU::determinant() const {
  if (singular_) return 0.0;
  cplx d = swaps_ % 2 ? -1.0 : 1.0;
  for (int i = 0; i < n_; ++i) d *= at(i, i);
  return d;
}

double ComplexLU::log_abs_determinant() const {
  if (singular_) return -std::numeric_limits<double>::infinity();
  double s = 0.0;
  for (int i = 0; i < n_; ++i) s += std::log(std::abs(at(i, i)));
  return s;
}

double ComplexLU::condition_estimate() const {
  if (singular_) return std::numeric_limits<double>::infinity();
  if (n_ == 0) return 1.0;
  // Hager's power iteration for ||A^{-1}||_1.
  const size_t n = static_cast<size_t>(n_);
  std::vector<cplx> x(n, cplx(1.0 / n_));
  double est = 0.0;
  size_t last = n;
  for (int iter = 0; iter < 5; ++iter) {
    const std::vector<cplx> y = solve(x);
    double ny = 0.0;
    for (const auto& v : y) ny += std::abs(v);
    if (iter > 0 && ny <= est) break;
    est = ny;
    std::vector<cplx> xi(n);
    for (size_t i = 0; i < n; ++i) xi[i] = std::abs(y[i]) > 0 ? y[i] / std::abs(y[i]) : cplx(1.0);
    const std::vector<cplx> z = solve_adjoint(xi);
    size_t j = 0;
    for (size_t i = 1; i < n; ++i)
      if (std::abs(z[i]) > std::abs(z[j])) j = i;
    if (j == last) break;
    last = j;
    std::fill(x.begin(), x.end(), cplx(0.0));
    x[j] = 1.0;
  }
  return est * norm1_;
}

}  // namespace merostat::numeric
