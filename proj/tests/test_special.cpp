#include <cmath>
#include <numbers>

#include <boost/math/special_functions/airy.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gmpxx.h>

#include "doctest.h"
#include "merostat/error.hpp"
#include "merostat/numeric/chebyshev.hpp"
#include "merostat/special/functions.hpp"

using namespace merostat::special;
using merostat::Error;
using merostat::ErrorCode;
using big = boost::multiprecision::cpp_bin_float_50;

namespace {

double boost_j(double alpha, double x) {
  return static_cast<double>(boost::math::cyl_bessel_j(big(alpha), big(x)));
}

big to_big(const mpq_class& q) { return big(q.get_num().get_str()) / big(q.get_den().get_str()); }

}  // namespace

TEST_CASE("trivial values and domain errors") {
  CHECK(bessel_j(0.0, 0.0) == 1.0);
  CHECK(bessel_j(2.0, 0.0) == 0.0);
  CHECK(sinc_pi(0.0) == 1.0);
  CHECK(sinc_pi(cplx(0.0)) == cplx(1.0));
  CHECK(sinc_pi(1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(sinc_pi(0.5) == doctest::Approx(2.0 / std::numbers::pi).epsilon(1e-15));
  CHECK_THROWS_AS(bessel_j(-1.0, 1.0), Error);
  CHECK_THROWS_AS(bessel_j(0.5, -1.0), Error);
  CHECK_THROWS_AS(bessel_j(-0.5, 0.0), Error);
  CHECK_THROWS_AS(airy_ai(cplx(8.0, 1.0)), Error);
  try {
    bessel_j(0.0, -2.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfDomain);
  }
}

TEST_CASE("J_1/2(2) against a 60-term exact rational series") {
  // J_{1/2}(2) = pi^{-1/2} sum_k (-1)^k 2^{k+1} / (k! (2k+1)!!); the series
  // alternates with decreasing terms, so the first omitted term bounds the tail.
  mpq_class sum = 0, term = 2;
  for (int k = 0; k < 60; ++k) {
    sum += term;
    term *= mpq_class(-2, (k + 1) * (2 * k + 3));
    term.canonicalize();
  }
  const big inv_sqrt_pi = 1 / boost::multiprecision::sqrt(boost::math::constants::pi<big>());
  const big lo = (to_big(sum) - abs(to_big(term))) * inv_sqrt_pi;
  const big hi = (to_big(sum) + abs(to_big(term))) * inv_sqrt_pi;
  const double j = bessel_j(0.5, 2.0);
  CHECK(std::fabs(j - static_cast<double>(lo)) < 1e-12);
  CHECK(std::fabs(j - static_cast<double>(hi)) < 1e-12);
  CHECK(j == doctest::Approx(std::sqrt(1.0 / std::numbers::pi) * std::sin(2.0)).epsilon(1e-14));
}

TEST_CASE("J_alpha relative accuracy on [0, 100] against multiprecision Boost") {
  double worst = 0.0;
  for (double alpha : {-0.75, -1.0 / 3.0, 0.0, 0.5, 1.0, 2.0 / 3.0, 2.5, 5.0, 7.25, 10.0}) {
    for (int i = 1; i <= 250; ++i) {
      const double x = 0.4 * i - 0.173;
      const double ref = boost_j(alpha, x);
      const double got = bessel_j(alpha, x);
      // Near a zero of J the relative error is ill-posed; measure against the local envelope.
      const double scale = std::max(std::fabs(ref), 1e-3 * std::sqrt(2.0 / (std::numbers::pi * x)));
      worst = std::max(worst, std::fabs(got - ref) / scale);
    }
  }
  MESSAGE("worst relative J error " << worst);
  CHECK(worst < 1e-12);
}

TEST_CASE("J_alpha agrees with the standard library") {
  for (double alpha : {0.0, 1.0, 3.5})
    for (double x : {0.1, 3.0, 11.9, 12.1, 30.0, 77.7})
      CHECK(bessel_j(alpha, x) == doctest::Approx(std::cyl_bessel_j(alpha, x)).epsilon(1e-11).scale(1e-6));
}

TEST_CASE("three-term recurrence residual") {
  double worst = 0.0;
  for (double alpha : {0.25, 1.0, 1.5, 3.0, 6.0, 9.0})
    for (double x : {0.3, 1.0, 4.5, 11.0, 13.0, 25.0, 60.0, 99.0}) {
      const double r = bessel_j(alpha - 1, x) + bessel_j(alpha + 1, x) - 2 * alpha / x * bessel_j(alpha, x);
      worst = std::max(worst, std::fabs(r));
    }
  CHECK(worst < 1e-10);
}

TEST_CASE("psi equals x phi' by finite differences") {
  for (double alpha : {0.0, 1.0, 2.5})
    for (double x : {0.5, 2.0, 9.0, 40.0, 150.0}) {
      const double h = 1e-3 * x;
      const double d = (-bessel_phi(alpha, x + 2 * h) + 8 * bessel_phi(alpha, x + h) - 8 * bessel_phi(alpha, x - h) +
                        bessel_phi(alpha, x - 2 * h)) /
                       (12 * h);
      CHECK(std::fabs(bessel_psi(alpha, x) - x * d) < 1e-8);
    }
  CHECK(bessel_psi(0.0, 0.0) == 0.0);
}

TEST_CASE("Airy absolute accuracy on [-10, 10]") {
  double worst = 0.0, worst_p = 0.0;
  for (int i = 0; i <= 2000; ++i) {
    const double x = -10.0 + 0.01 * i;
    worst = std::max(worst, std::fabs(airy_ai(x) - static_cast<double>(boost::math::airy_ai(big(x)))));
    worst_p = std::max(worst_p, std::fabs(airy_ai_prime(x) - static_cast<double>(boost::math::airy_ai_prime(big(x)))));
  }
  MESSAGE("worst Ai error " << worst << ", Ai' error " << worst_p);
  CHECK(worst < 1e-12);
  CHECK(worst_p < 1e-12);
  CHECK(airy_ai(30.0) == doctest::Approx(static_cast<double>(boost::math::airy_ai(big(30.0)))).epsilon(1e-12));
}

TEST_CASE("Ai'' = x Ai by Chebyshev differentiation on [-5, 5]") {
  const auto g = merostat::numeric::chebyshev_grid(48, -5.0, 5.0);
  Eigen::VectorXd ai(g.x.size()), xai(g.x.size());
  for (int i = 0; i < g.x.size(); ++i) {
    ai(i) = airy_ai(g.x(i));
    xai(i) = g.x(i) * ai(i);
  }
  CHECK((g.D * (g.D * ai) - xai).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("complex Airy series") {
  for (double x : {-4.0, -0.5, 0.7, 5.5}) {
    const cplx z(x, 1e-300);
    CHECK(std::abs(airy_ai(z) - airy_ai(x)) < 1e-13);
  }
  // Ai(z) + w Ai(w z) + w^2 Ai(w^2 z) = 0 with w = exp(2 pi i / 3).
  const cplx w = std::polar(1.0, 2 * std::numbers::pi / 3);
  for (cplx z : {cplx(1.0, 2.0), cplx(-3.0, 0.5), cplx(0.2, -4.0)}) {
    CHECK(std::abs(airy_ai(z) + w * airy_ai(w * z) + w * w * airy_ai(w * w * z)) < 1e-12);
    CHECK(std::abs(airy_ai(std::conj(z)) - std::conj(airy_ai(z))) < 1e-14);
    const double h = 1e-4;
    const cplx d = (airy_ai(z + h) - airy_ai(z - h)) / (2 * h);
    CHECK(std::abs(d - airy_ai_prime(z)) < 1e-7);
  }
}

TEST_CASE("eval_special dispatch") {
  CHECK(eval_special(SpecialId::BesselJ, 3.0, 1.0) == cplx(bessel_j(1.0, 3.0)));
  CHECK(eval_special(SpecialId::AiryAiPrime, -2.0) == cplx(airy_ai_prime(-2.0)));
  CHECK(std::abs(eval_special(SpecialId::Exp, cplx(0, std::numbers::pi)) + 1.0) < 1e-15);
  CHECK_THROWS_AS(eval_special(SpecialId::BesselJ, cplx(1, 1), 0.0), Error);
  CHECK(to_string(SpecialId::SincPi) == "sinc_pi");
}
