#pragma once

// Truncated matrix Laurent series  sum_{k >= low} a_k t^k,  t = x - x0.
// Coefficients are known exactly through order known_to(); a terminating
// series (a Laurent polynomial) has known_to() == kExactOrder.

#include <climits>
#include <vector>

#include "merostat/exact/matrix.hpp"

namespace merostat::singular {

using exact::ExactMatrix;
using exact::GaussianRational;

inline constexpr int kExactOrder = INT_MAX;

class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  /// Zero series of size rows x cols, exact to all orders.
  LaurentMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}
  LaurentMatrix(int low, std::vector<ExactMatrix> coeffs, int known_to = kExactOrder,
                GaussianRational center = GaussianRational(0));

  static LaurentMatrix constant(const ExactMatrix& m);
  static LaurentMatrix identity(int n) { return constant(ExactMatrix::identity(n)); }
  /// m * t^k.
  static LaurentMatrix monomial(const ExactMatrix& m, int k);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const GaussianRational& center() const { return center_; }
  void set_center(GaussianRational c) { center_ = std::move(c); }

  /// Lowest stored order; the coefficient there is nonzero unless the series is zero.
  int low() const { return low_; }
  /// Highest order with a stored (nonzero) coefficient; low() - 1 when zero.
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  int known_to() const { return known_to_; }
  bool terminating() const { return known_to_ == kExactOrder; }
  bool zero() const { return coeffs_.empty(); }

  /// Coefficient of t^k; throws TruncationTooShort beyond known_to().
  ExactMatrix coeff(int k) const;
  const std::vector<ExactMatrix>& coeffs() const { return coeffs_; }

  /// Drop everything above order k (known_to becomes min(known_to, k)).
  LaurentMatrix truncated(int k) const;
  LaurentMatrix transpose() const;
  LaurentMatrix derivative() const;
  /// Multiply by t^s.
  LaurentMatrix shifted(int s) const;

  friend LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator-(const LaurentMatrix& a);
  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator*(const ExactMatrix& m, const LaurentMatrix& a);
  friend LaurentMatrix operator*(const LaurentMatrix& a, const ExactMatrix& m);

  /// Exact equality through order k (both sides must be known there).
  bool equal_through(const LaurentMatrix& o, int k) const;

 private:
  void trim();

  int rows_ = 0;
  int cols_ = 0;
  int low_ = 0;
  std::vector<ExactMatrix> coeffs_;
  int known_to_ = kExactOrder;
  GaussianRational center_{0};
};

/// Inverse of a terminating Laurent matrix polynomial F with det F not
/// identically zero, computed through order `order` (exact when det F is a
/// monomial).  Uses F^{-1} = adj(G) / det(G) t^{-l} with G = t^{-l} F.
LaurentMatrix inverse_series(const LaurentMatrix& f, int order);

/// B = F^{-1} A F - F^{-1} F'.  When A is terminating and F^{-1} is not,
/// `order` bounds how far B is computed.  Throws TruncationTooShort when the
/// result would not be known through `min_known`.
LaurentMatrix gauge_transform(const LaurentMatrix& a, const LaurentMatrix& f, int order = INT_MIN,
                              int min_known = INT_MIN);

/// diag(t^{e_1}, ..., t^{e_n}).
LaurentMatrix monomial_diagonal(const std::vector<int>& exponents);

}  // namespace merostat::singular
