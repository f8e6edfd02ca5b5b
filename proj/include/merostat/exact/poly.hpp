#pragma once

// Dense univariate polynomials over an exact coefficient ring.  Division and
// gcd require a field (Rational or GaussianRational); the ring operations also
// work with Poly<Rational> coefficients, which is how polynomials in a second
// variable (the spectral parameter) are carried.

#include <algorithm>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "merostat/exact/rational.hpp"

namespace merostat::exact {

template <class T>
class Poly;

template <class T>
bool is_zero(const Poly<T>& p);

template <class T>
std::string to_string(const Poly<T>& p);

template <class T>
class Poly {
 public:
  Poly() = default;
  Poly(int c) : coeffs_{T(c)} { trim(); }  // NOLINT(google-explicit-constructor)
  Poly(T c) : coeffs_{std::move(c)} { trim(); }  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly monomial(T c, int power) {
    std::vector<T> v(static_cast<size_t>(power) + 1, T(0));
    v.back() = std::move(c);
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(T(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool zero() const { return coeffs_.empty(); }
  const std::vector<T>& coeffs() const { return coeffs_; }
  T coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<size_t>(k)] : T(0);
  }
  const T& lead() const { return coeffs_.back(); }
  /// Lowest power with a nonzero coefficient; -1 for the zero polynomial.
  int valuation() const {
    for (size_t k = 0; k < coeffs_.size(); ++k)
      if (!is_zero(coeffs_[k])) return static_cast<int>(k);
    return -1;
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.zero() || b.zero()) return Poly();
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (is_zero(a.coeffs_[i])) continue;
      for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly scaled(const T& s) const {
    std::vector<T> v = coeffs_;
    for (auto& c : v) c *= s;
    return Poly(std::move(v));
  }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<T> v(coeffs_.size() - 1, T(0));
    for (size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * T(static_cast<int>(k));
    return Poly(std::move(v));
  }

  /// Antiderivative vanishing at 0 (field coefficients).
  Poly antiderivative() const {
    std::vector<T> v(coeffs_.size() + 1, T(0));
    for (size_t k = 0; k < coeffs_.size(); ++k) v[k + 1] = coeffs_[k] / T(static_cast<int>(k + 1));
    return Poly(std::move(v));
  }

  template <class U>
  U eval(const U& x) const {
    U acc = U(0);
    for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + U(coeffs_[k]);
    return acc;
  }
  T operator()(const T& x) const { return eval<T>(x); }

  std::complex<double> eval_complex(std::complex<double> x) const {
    std::complex<long double> acc = 0, xx(x.real(), x.imag());
    for (size_t k = coeffs_.size(); k-- > 0;) {
      auto c = to_complex(coeffs_[k]);
      acc = acc * xx + std::complex<long double>(c.real(), c.imag());
    }
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
  }

  /// p(q(x)).
  Poly compose(const Poly& q) const {
    Poly acc;
    for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * q + Poly(coeffs_[k]);
    return acc;
  }
  /// p(x + a).
  Poly shifted(const T& a) const { return compose(Poly(std::vector<T>{a, T(1)})); }
  /// p(a x).
  Poly scaled_argument(const T& a) const {
    std::vector<T> v = coeffs_;
    T pw(1);
    for (auto& c : v) {
      c *= pw;
      pw *= a;
    }
    return Poly(std::move(v));
  }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim() {
    while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

template <class T>
bool is_zero(const Poly<T>& p) {
  return p.zero();
}

template <class T>
std::string Poly<T>::to_string(const std::string& var) const {
  if (zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = coeffs_.size(); k-- > 0;) {
    if (is_zero(coeffs_[k])) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << exact::to_string(coeffs_[k]) << ")";
    if (k >= 1) os << "*" << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

template <class T>
std::string to_string(const Poly<T>& p) {
  return p.to_string("t");
}

/// Quotient and remainder; field coefficients only.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
  if (b.zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<T>(), a};
  std::vector<T> r = a.coeffs();
  std::vector<T> q(static_cast<size_t>(a.degree() - b.degree() + 1), T(0));
  const T inv_lead = T(1) / b.lead();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    const T c = r[static_cast<size_t>(k)] * inv_lead;
    if (is_zero(c)) continue;
    q[static_cast<size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(k - db + j)] -= c * b.coeffs()[static_cast<size_t>(j)];
  }
  r.resize(static_cast<size_t>(db));
  return {Poly<T>(std::move(q)), Poly<T>(std::move(r))};
}

template <class T>
Poly<T> operator%(const Poly<T>& a, const Poly<T>& b) {
  return divmod(a, b).second;
}

/// Exact division; throws if b does not divide a.
template <class T>
Poly<T> exact_div(const Poly<T>& a, const Poly<T>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.zero()) throw std::domain_error("polynomial division is not exact");
  return q;
}

template <class T>
Poly<T> monic(const Poly<T>& p) {
  if (p.zero()) return p;
  return p.scaled(T(1) / p.lead());
}

/// Monic gcd; gcd(0, 0) = 0.
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  while (!b.zero()) {
    Poly<T> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Square-free factorization (Yun): returns factors f_1, f_2, ... with
/// p = lead * prod f_i^i, each f_i monic and square-free, pairwise coprime.
template <class T>
std::vector<Poly<T>> squarefree_decomposition(const Poly<T>& p) {
  std::vector<Poly<T>> out;
  if (p.degree() <= 0) return out;
  Poly<T> a = monic(p);
  Poly<T> da = a.derivative();
  Poly<T> b = gcd(a, da);
  Poly<T> c = exact_div(a, b);
  Poly<T> d = exact_div(da, b) - c.derivative();
  while (c.degree() > 0) {
    Poly<T> g = gcd(c, d);
    out.push_back(g);
    c = exact_div(c, g);
    d = exact_div(d, g) - c.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

template <class T>
Poly<T> squarefree_part(const Poly<T>& p) {
  if (p.degree() <= 0) return Poly<T>(T(1));
  return monic(exact_div(p, gcd(p, p.derivative())));
}

}  // namespace merostat::exact
