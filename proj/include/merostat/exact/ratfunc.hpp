#pragma once

// Exact rational functions num/den over Q, kept in a canonical form:
// gcd(num, den) = 1 and den monic.  Equality is therefore structural.

#include <complex>
#include <stdexcept>
#include <string>

#include "merostat/exact/poly.hpp"

namespace merostat::exact {

class RationalFunction {
 public:
  using P = Poly<Rational>;

  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(int c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(P num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(P num, P den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  const P& num() const { return num_; }
  const P& den() const { return den_; }
  bool zero() const { return num_.zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a) { return {-a.num_, a.den_}; }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.zero()) throw std::domain_error("rational function division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  RationalFunction reciprocal() const { return RationalFunction(den_, num_); }
  RationalFunction derivative() const {
    return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
  }
  /// r(a x).
  RationalFunction scaled_argument(const Rational& a) const {
    return {num_.scaled_argument(a), den_.scaled_argument(a)};
  }

  Rational operator()(const Rational& x) const {
    Rational d = den_(x);
    if (sgn(d) == 0) throw std::domain_error("rational function evaluated at a pole");
    return num_(x) / d;
  }
  std::complex<double> eval_complex(std::complex<double> x) const {
    return num_.eval_complex(x) / den_.eval_complex(x);
  }

  std::string to_string(const std::string& var = "x") const {
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
  }

 private:
  void normalize() {
    if (den_.zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.zero()) {
      den_ = P(1);
      return;
    }
    P g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    const Rational lc = den_.lead();
    if (lc != 1) {
      num_ = num_.scaled(Rational(1) / lc);
      den_ = den_.scaled(Rational(1) / lc);
    }
  }

  P num_;
  P den_;
};

}  // namespace merostat::exact
