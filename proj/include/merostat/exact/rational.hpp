#pragma once

// Exact scalars: big rationals (GMP) and Gaussian rationals a + b i.

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace merostat::exact {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p", "p/q" or a terminating decimal such as "-0.25".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
inline double to_double(const Rational& q) { return q.get_d(); }
bool is_integer(const Rational& q);
/// Exact rational square root when q is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_integer() const { return is_real() && exact::is_integer(re_); }
  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Square root inside Q(i), when one exists.
std::optional<GaussianRational> exact_sqrt(const GaussianRational& z);
std::string to_string(const GaussianRational& z);
GaussianRational parse_gaussian(std::string_view text);
std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }
inline std::complex<double> to_complex(const Rational& q) { return {q.get_d(), 0.0}; }
inline std::complex<double> to_complex(const GaussianRational& z) { return z.to_complex(); }

}  // namespace merostat::exact
