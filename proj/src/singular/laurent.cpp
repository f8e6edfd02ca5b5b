#include "merostat/singular/laurent.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "merostat/error.hpp"

namespace merostat::singular {

namespace {

using exact::Poly;
using GPoly = Poly<GaussianRational>;

int clamp_order(long long k) {
  if (k >= kExactOrder) return kExactOrder;
  if (k <= INT_MIN / 2) return INT_MIN / 2;
  return static_cast<int>(k);
}

/// k + s, keeping kExactOrder absorbing.
int add_order(int k, int s) { return k == kExactOrder ? k : clamp_order(static_cast<long long>(k) + s); }

}  // namespace

LaurentMatrix::LaurentMatrix(int low, std::vector<ExactMatrix> coeffs, int known_to, GaussianRational center)
    : low_(low), coeffs_(std::move(coeffs)), known_to_(known_to), center_(std::move(center)) {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "LaurentMatrix needs at least one coefficient to fix its size");
  rows_ = coeffs_.front().rows();
  cols_ = coeffs_.front().cols();
  for (const auto& c : coeffs_)
    if (c.rows() != rows_ || c.cols() != cols_) throw Error(ErrorCode::InvalidArgument, "inconsistent Laurent coefficient sizes");
  if (known_to_ != kExactOrder && high() > known_to_) {
    coeffs_.resize(static_cast<size_t>(known_to_ - low_ + 1 > 0 ? known_to_ - low_ + 1 : 0));
  }
  trim();
}

LaurentMatrix LaurentMatrix::constant(const ExactMatrix& m) { return LaurentMatrix(0, {m}); }

LaurentMatrix LaurentMatrix::monomial(const ExactMatrix& m, int k) { return LaurentMatrix(k, {m}); }

void LaurentMatrix::trim() {
  size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    low_ += static_cast<int>(lead);
  }
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.empty()) low_ = terminating() ? 0 : add_order(known_to_, 1);
}

ExactMatrix LaurentMatrix::coeff(int k) const {
  if (k > known_to_)
    throw Error(ErrorCode::TruncationTooShort,
                "coefficient of order " + std::to_string(k) + " requested, series known through " + std::to_string(known_to_));
  if (k < low_ || k > high()) return ExactMatrix(rows_, cols_);
  return coeffs_[static_cast<size_t>(k - low_)];
}

LaurentMatrix LaurentMatrix::truncated(int k) const {
  LaurentMatrix out = *this;
  out.known_to_ = std::min(known_to_, k);
  if (!out.coeffs_.empty() && out.high() > out.known_to_) {
    const int keep = out.known_to_ - out.low_ + 1;
    out.coeffs_.resize(static_cast<size_t>(std::max(keep, 0)));
  }
  out.trim();
  return out;
}

LaurentMatrix LaurentMatrix::transpose() const {
  LaurentMatrix out = *this;
  std::swap(out.rows_, out.cols_);
  for (auto& c : out.coeffs_) c = c.transpose();
  return out;
}

LaurentMatrix LaurentMatrix::derivative() const {
  LaurentMatrix out(rows_, cols_);
  out.center_ = center_;
  out.known_to_ = add_order(known_to_, -1);
  out.low_ = low_ - 1;
  for (int k = low_; k <= high(); ++k) out.coeffs_.push_back(coeffs_[static_cast<size_t>(k - low_)] * GaussianRational(k));
  out.trim();
  return out;
}

LaurentMatrix LaurentMatrix::shifted(int s) const {
  LaurentMatrix out = *this;
  out.low_ += s;
  out.known_to_ = add_order(known_to_, s);
  if (out.coeffs_.empty()) out.trim();
  return out;
}

LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b) {
  LaurentMatrix out(a.rows_, a.cols_);
  out.center_ = a.center_;
  out.known_to_ = std::min(a.known_to_, b.known_to_);
  if (a.zero() && b.zero()) {
    out.trim();
    return out;
  }
  int lo = a.zero() ? b.low_ : (b.zero() ? a.low_ : std::min(a.low_, b.low_));
  int hi = std::max(a.zero() ? INT_MIN : a.high(), b.zero() ? INT_MIN : b.high());
  hi = std::min(hi, out.known_to_);
  out.low_ = lo;
  for (int k = lo; k <= hi; ++k) out.coeffs_.push_back(a.coeff(k) + b.coeff(k));
  out.trim();
  return out;
}

LaurentMatrix operator-(const LaurentMatrix& a) {
  LaurentMatrix out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) { return a + (-b); }

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "Laurent product size mismatch");
  LaurentMatrix out(a.rows_, b.cols_);
  out.center_ = a.center_;
  const int known_ab = (a.terminating() && b.terminating())
                           ? kExactOrder
                           : std::min(add_order(a.known_to_, b.low_), add_order(b.known_to_, a.low_));
  out.known_to_ = known_ab;
  if (a.zero() || b.zero()) {
    out.trim();
    return out;
  }
  const int lo = a.low_ + b.low_;
  const int hi = std::min(a.high() + b.high(), known_ab);
  out.low_ = lo;
  for (int k = lo; k <= hi; ++k) {
    ExactMatrix acc(a.rows_, b.cols_);
    const int i0 = std::max(a.low_, k - b.high());
    const int i1 = std::min(a.high(), k - b.low_);
    for (int i = i0; i <= i1; ++i) acc += a.coeffs_[static_cast<size_t>(i - a.low_)] * b.coeffs_[static_cast<size_t>(k - i - b.low_)];
    out.coeffs_.push_back(std::move(acc));
  }
  out.trim();
  return out;
}

LaurentMatrix operator*(const ExactMatrix& m, const LaurentMatrix& a) { return LaurentMatrix::constant(m) * a; }

LaurentMatrix operator*(const LaurentMatrix& a, const ExactMatrix& m) { return a * LaurentMatrix::constant(m); }

bool LaurentMatrix::equal_through(const LaurentMatrix& o, int k) const {
  const int lo = std::min(zero() ? k : low_, o.zero() ? k : o.low_);
  for (int j = lo; j <= k; ++j)
    if (coeff(j) != o.coeff(j)) return false;
  return true;
}

LaurentMatrix monomial_diagonal(const std::vector<int>& exponents) {
  const int n = static_cast<int>(exponents.size());
  LaurentMatrix out(n, n);
  for (int i = 0; i < n; ++i) {
    ExactMatrix e(n, n);
    e(i, i) = GaussianRational(1);
    out = out + LaurentMatrix::monomial(e, exponents[static_cast<size_t>(i)]);
  }
  return out;
}

LaurentMatrix inverse_series(const LaurentMatrix& f, int order) {
  if (!f.terminating()) throw Error(ErrorCode::InvalidArgument, "gauge matrix must be a Laurent polynomial");
  if (f.rows() != f.cols()) throw Error(ErrorCode::InvalidArgument, "gauge matrix must be square");
  if (f.zero()) throw Error(ErrorCode::InvalidArgument, "gauge matrix is identically zero");
  const int n = f.rows();
  const int l = f.low();
  // G = t^{-l} F as a matrix of polynomials.
  exact::Matrix<GPoly> g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<GaussianRational> c;
      for (int k = l; k <= f.high(); ++k) c.push_back(f.coeff(k)(i, j));
      g(i, j) = GPoly(std::move(c));
    }
  // Division-free adjugate by Cayley-Hamilton:
  // adj(G) = (-1)^{n-1} (G^{n-1} + c_1 G^{n-2} + ... + c_{n-1} I), det G = (-1)^n c_n.
  auto cp = exact::charpoly(g);
  std::vector<GPoly> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<size_t>(k)] = cp.coeff(n - k);
  exact::Matrix<GPoly> acc = exact::Matrix<GPoly>::identity(n);
  for (int k = 1; k < n; ++k) {
    acc = g * acc;
    for (int i = 0; i < n; ++i) acc(i, i) += c[static_cast<size_t>(k)];
  }
  const GaussianRational sign_adj = (n - 1) % 2 ? GaussianRational(-1) : GaussianRational(1);
  const GaussianRational sign_det = n % 2 ? GaussianRational(-1) : GaussianRational(1);
  GPoly det = c[static_cast<size_t>(n)].scaled(sign_det);
  if (det.zero()) throw Error(ErrorCode::InvalidArgument, "gauge matrix is singular for all x");
  const int v = det.valuation();
  // det = t^v u(t); w = 1/u as a power series.
  std::vector<GaussianRational> u(det.coeffs().begin() + v, det.coeffs().end());
  const bool exact_inverse = u.size() == 1;
  const int low_inv = -l - v;
  int w_len;
  if (exact_inverse) {
    w_len = 1;
  } else {
    w_len = std::max(1, order - low_inv + 1);
  }
  std::vector<GaussianRational> w(static_cast<size_t>(w_len));
  w[0] = GaussianRational(1) / u[0];
  for (int k = 1; k < w_len; ++k) {
    GaussianRational s(0);
    for (int j = 1; j <= k && j < static_cast<int>(u.size()); ++j) s += u[static_cast<size_t>(j)] * w[static_cast<size_t>(k - j)];
    w[static_cast<size_t>(k)] = -s / u[0];
  }
  int adj_deg = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) adj_deg = std::max(adj_deg, acc(i, j).degree());
  std::vector<ExactMatrix> adj_coeffs;
  for (int k = 0; k <= adj_deg; ++k) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = acc(i, j).coeff(k) * sign_adj;
    adj_coeffs.push_back(std::move(m));
  }
  LaurentMatrix adj(0, std::move(adj_coeffs));
  std::vector<ExactMatrix> w_coeffs;
  for (const auto& wk : w) w_coeffs.push_back(ExactMatrix::identity(n) * wk);
  LaurentMatrix wser(0, std::move(w_coeffs), exact_inverse ? kExactOrder : w_len - 1);
  LaurentMatrix out = (adj * wser).shifted(low_inv);
  out.set_center(f.center());
  return exact_inverse ? out : out.truncated(order);
}

LaurentMatrix gauge_transform(const LaurentMatrix& a, const LaurentMatrix& f, int order, int min_known) {
  if (a.rows() != f.rows() || f.rows() != f.cols())
    throw Error(ErrorCode::InvalidArgument, "gauge transform size mismatch");
  int target = order;
  if (target == INT_MIN) target = a.terminating() ? a.high() + 2 * a.rows() + 5 : a.known_to();
  const int a_low = a.zero() ? 0 : a.low();
  const int finv_order = target - std::min(a_low, -1) - f.low() + 1;
  LaurentMatrix finv = inverse_series(f, finv_order);
  LaurentMatrix b = finv * (a * f) - finv * f.derivative();
  if (!finv.terminating() || order != INT_MIN) b = b.truncated(std::max(target, INT_MIN / 2));
  if (min_known != INT_MIN && b.known_to() < min_known)
    throw Error(ErrorCode::TruncationTooShort, "gauge transform known through order " + std::to_string(b.known_to()) +
                                                   ", need " + std::to_string(min_known));
  b.set_center(a.center());
  return b;
}

}  // namespace merostat::singular
