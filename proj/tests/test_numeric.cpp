#include <atomic>
#include <cmath>
#include <cstdlib>
#include <random>

#include "doctest.h"
#include "merostat/error.hpp"
#include "merostat/numeric/chebyshev.hpp"
#include "merostat/numeric/lu.hpp"
#include "merostat/numeric/parallel.hpp"
#include "merostat/numeric/quadrature.hpp"
#include "merostat/simd/kernels.hpp"

using namespace merostat::numeric;
using merostat::simd::cplx;
namespace simd = merostat::simd;

namespace {

std::vector<cplx> random_vector(std::mt19937& rng, size_t n) {
  std::normal_distribution<double> g;
  std::vector<cplx> v(n);
  for (auto& z : v) z = {g(rng), g(rng)};
  return v;
}

Eigen::MatrixXcd random_matrix(std::mt19937& rng, int n) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = {g(rng), g(rng)};
  return a;
}

double scale_of(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double s = 1.0;
  for (size_t i = 0; i < a.size(); ++i) s += std::abs(a[i]) * std::abs(b[i]);
  return s;
}

std::vector<const simd::KernelTable*> variants() {
  std::vector<const simd::KernelTable*> out{&simd::scalar_kernels()};
  if (simd::avx2_kernels() && simd::detect_isa() == simd::Isa::Avx2) out.push_back(simd::avx2_kernels());
  if (simd::neon_kernels() && simd::detect_isa() == simd::Isa::Neon) out.push_back(simd::neon_kernels());
  return out;
}

}  // namespace

TEST_CASE("Gauss-Legendre integrates polynomials of degree 2n - 1 exactly") {
  for (int n : {1, 2, 5, 16, 33, 64}) {
    const Rule& r = gauss_legendre(n);
    for (int d = 0; d <= 2 * n - 1; d += 1) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += r.w[static_cast<size_t>(i)] * std::pow(r.x[static_cast<size_t>(i)], d);
      const double exact = d % 2 ? 0.0 : 2.0 / (d + 1);
      CHECK(s == doctest::Approx(exact).epsilon(1e-13).scale(1.0));
    }
  }
  CHECK(integrate([](double x) { return std::exp(x); }, 0.0, 1.0, 12) == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-15));
  const Rule c = composite_gauss_legendre(8, 4, 0.0, 2.0);
  CHECK(c.size() == 32);
  double s = 0.0;
  for (int i = 0; i < c.size(); ++i) s += c.w[static_cast<size_t>(i)] * std::sin(c.x[static_cast<size_t>(i)]);
  CHECK(s == doctest::Approx(1.0 - std::cos(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(gauss_legendre(0), merostat::Error);
}

TEST_CASE("SIMD kernels agree with the scalar reference") {
  std::mt19937 rng(11);
  const auto& ref = simd::scalar_kernels();
  for (const auto* k : variants()) {
    CAPTURE(simd::to_string(k->isa));
    for (size_t n : {0, 1, 2, 3, 7, 8, 31, 64, 101}) {
      auto x = random_vector(rng, n), y = random_vector(rng, n);
      std::vector<double> w(n);
      for (auto& v : w) v = std::uniform_real_distribution<double>(0, 1)(rng);
      const cplx a{0.3, -1.7};
      const double tol = 1e-14 * scale_of(x, y);
      CHECK(std::abs(k->zdotu(n, x.data(), y.data()) - ref.zdotu(n, x.data(), y.data())) <= tol);
      CHECK(std::abs(k->zdotc(n, x.data(), y.data()) - ref.zdotc(n, x.data(), y.data())) <= tol);
      CHECK(std::abs(k->zwdotu(n, w.data(), x.data(), y.data()) - ref.zwdotu(n, w.data(), x.data(), y.data())) <= tol);
      auto y1 = y, y2 = y;
      k->zaxpy(n, a, x.data(), y1.data());
      ref.zaxpy(n, a, x.data(), y2.data());
      for (size_t i = 0; i < n; ++i) CHECK(std::abs(y1[i] - y2[i]) <= 1e-14 * (1 + std::abs(y2[i])));
      y1 = y, y2 = y;
      k->zrow_update(n, a, x.data(), y1.data());
      ref.zrow_update(n, a, x.data(), y2.data());
      for (size_t i = 0; i < n; ++i) CHECK(std::abs(y1[i] - y2[i]) <= 1e-14 * (1 + std::abs(y2[i])));
    }
  }
}

TEST_CASE("scalar reference kernels match the definitions") {
  const auto& k = simd::scalar_kernels();
  std::vector<cplx> x{{1, 2}, {3, -1}}, y{{0, 1}, {2, 2}};
  CHECK(k.zdotu(2, x.data(), y.data()) == cplx(1, 2) * cplx(0, 1) + cplx(3, -1) * cplx(2, 2));
  CHECK(k.zdotc(2, x.data(), y.data()) == std::conj(cplx(1, 2)) * cplx(0, 1) + std::conj(cplx(3, -1)) * cplx(2, 2));
}

TEST_CASE("isa forcing") {
  simd::force_isa(simd::Isa::Scalar);
  CHECK(simd::active_kernels().isa == simd::Isa::Scalar);
  simd::reset_isa();
  CHECK(simd::active_kernels().isa == simd::detect_isa());
  if (!simd::neon_kernels()) CHECK_THROWS_AS(simd::force_isa(simd::Isa::Neon), merostat::Error);
}

TEST_CASE("ComplexLU solves, determinants and condition estimates match Eigen") {
  std::mt19937 rng(3);
  for (const auto* k : variants()) {
    simd::force_isa(k->isa);
    for (int n : {1, 2, 5, 17, 40}) {
      const Eigen::MatrixXcd a = random_matrix(rng, n);
      const Eigen::VectorXcd b = random_matrix(rng, n).col(0);
      ComplexLU lu(a);
      const Eigen::VectorXcd x = lu.solve(b);
      CHECK((a * x - b).norm() <= 1e-11 * (1 + b.norm()) * a.norm());
      const cplx det = a.fullPivLu().determinant();
      CHECK(std::abs(lu.determinant() - det) <= 1e-9 * std::abs(det));
      CHECK(lu.log_abs_determinant() == doctest::Approx(std::log(std::abs(det))).epsilon(1e-10));
      std::vector<cplx> bv(b.data(), b.data() + n);
      const auto xa = lu.solve_adjoint(bv);
      const Eigen::VectorXcd xe = Eigen::Map<const Eigen::VectorXcd>(xa.data(), n);
      CHECK((a.adjoint() * xe - b).norm() <= 1e-10 * (1 + b.norm()) * a.norm());
      const Eigen::MatrixXcd inv = a.inverse();
      double n1 = 0, ni = 0;
      for (int j = 0; j < n; ++j) {
        n1 = std::max(n1, a.col(j).cwiseAbs().sum());
        ni = std::max(ni, inv.col(j).cwiseAbs().sum());
      }
      const double kappa = n1 * ni;
      CHECK(lu.condition_estimate() <= kappa * (1 + 1e-10));
      CHECK(lu.condition_estimate() >= kappa / 10);
    }
  }
  simd::reset_isa();
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(3, 3);
  s(0, 0) = 1;
  ComplexLU lu(s);
  CHECK(lu.singular());
  CHECK(lu.determinant() == cplx(0));
  CHECK(std::isinf(lu.condition_estimate()));
  CHECK_THROWS_AS(lu.solve(std::vector<cplx>(3)), merostat::Error);
}

TEST_CASE("parallel_for visits every index once and honours MEROSTAT_THREADS") {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), [&](size_t i) { hits[i]++; });
  for (auto& h : hits) CHECK(h.load() == 1);
  setenv("MEROSTAT_THREADS", "1", 1);
  CHECK(thread_count() == 1);
  setenv("MEROSTAT_THREADS", "2", 1);
  CHECK(thread_count() <= 2);
  unsetenv("MEROSTAT_THREADS");
  CHECK_THROWS_AS(parallel_for(10, [](size_t i) {
                    if (i == 7) throw std::runtime_error("boom");
                  }),
                  std::runtime_error);
}

TEST_CASE("Chebyshev differentiation is exact on polynomials") {
  const auto g = chebyshev_grid(12, -1.0, 3.0);
  Eigen::VectorXd f(13), df(13);
  for (int i = 0; i <= 12; ++i) {
    const double x = g.x(i);
    f(i) = x * x * x - 2 * x + 1;
    df(i) = 3 * x * x - 2;
  }
  CHECK((g.D * f - df).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(chebyshev_interpolate(g, f, 0.37) == doctest::Approx(0.37 * 0.37 * 0.37 - 0.74 + 1).epsilon(1e-12));
}
