#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "merostat/error.hpp"
#include "merostat/spectral/pencil.hpp"
#include "merostat/spectral/r_condition.hpp"

using namespace merostat::spectral;
using merostat::ErrorCode;
using merostat::exact::ExactMatrix;
using merostat::exact::Poly;
using merostat::exact::Rational;
using merostat::singular::Verdict;
using G = GaussianRational;
using RPoly = Poly<Rational>;

namespace {

ExactMatrix gm(std::initializer_list<std::initializer_list<int>> rows) {
  ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (int v : r) m(i, j++) = G(v);
    ++i;
  }
  return m;
}

MatrixPencil residue_pencil(const ExactMatrix& p, const ExactMatrix& q) {
  const int n = p.rows();
  return MatrixPencil{-1, {p, ExactMatrix(n, n)}, {q, ExactMatrix(n, n)}};
}

const std::vector<G> kRhos{G(1), G::i(), G(Rational(2), Rational(-3))};

RPoly linear(const Rational& root) { return RPoly(std::vector<Rational>{-root, Rational(1)}); }

RationalFunction ratio(const RPoly& n, const RPoly& d) { return RationalFunction(n, d); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const merostat::Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-12, 12), den(1, 4);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("pencil_integer_check examples") {
  for (int l1 : {-2, 0, 3})
    for (int l2 : {-1, 1}) {
      auto rep = pencil_integer_check(residue_pencil(gm({{l1, 5}, {0, l2}}), gm({{0, 7}, {0, 0}})), kRhos);
      CHECK(rep.passes);
      CHECK(rep.rho_free);
      REQUIRE(rep.spectrum.size() == 2);
      for (const auto& s : rep.samples) {
        std::vector<double> re{s.eigenvalues[0].real(), s.eigenvalues[1].real()};
        std::sort(re.begin(), re.end());
        CHECK(re[0] == doctest::Approx(std::min(l1, l2)));
        CHECK(re[1] == doctest::Approx(std::max(l1, l2)));
      }
    }
  CHECK(pencil_integer_check(residue_pencil(gm({{2, 0}, {1, -3}}), ExactMatrix(2, 2)), kRhos).passes);
  auto off = pencil_integer_check(residue_pencil(ExactMatrix(2, 2), gm({{0, 1}, {1, 0}})), kRhos);
  CHECK_FALSE(off.passes);
  CHECK_FALSE(off.rho_free);
  auto frac = pencil_integer_check(residue_pencil(gm({{1, 0}, {0, 0}}) * G(Rational(1, 2)), ExactMatrix(2, 2)), kRhos);
  CHECK(frac.rho_free);
  CHECK_FALSE(frac.passes);
}

TEST_CASE("pencil_integer_check is invariant under simultaneous conjugation") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    ExactMatrix p(3, 3), q(3, 3), t = ExactMatrix::identity(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (j >= i) p(i, j) = G(val(rng));
        if (j > i || trial % 2) q(i, j) = G(val(rng));
        if (i != j) t(i, j) = G(val(rng));
      }
    const auto tinv = merostat::exact::inverse(t);
    if (!tinv) continue;
    const bool a = pencil_integer_check(residue_pencil(p, q), kRhos).passes;
    const bool b = pencil_integer_check(residue_pencil(*tinv * p * t, *tinv * q * t), kRhos).passes;
    CHECK(a == b);
  }
}

TEST_CASE("pencil_integer_check_numeric") {
  Eigen::MatrixXcd p(2, 2), q(2, 2);
  p << 1, 4, 0, -2;
  q << 0, 3, 0, 0;
  const std::vector<std::complex<double>> rhos{{1, 0}, {0, 1}, {2, -3}};
  CHECK(pencil_integer_check_numeric(p, q, rhos).passes);
  q << 0, 1, 1, 0;
  CHECK_FALSE(pencil_integer_check_numeric(Eigen::MatrixXcd::Zero(2, 2), q, rhos).passes);
  CHECK(code_of([&] { pencil_integer_check_numeric(p, q, {{1, 0}, {1, 0}, {2, 0}}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("r_condition_check examples") {
  auto id = r_condition_check(MeromorphicHandle::rational(RationalFunction(RPoly::x())));
  CHECK(id.passes);
  REQUIRE(id.points.size() == 1);
  CHECK(id.points[0].kind == PointKind::Root);

  auto bad = r_condition_check(MeromorphicHandle::rational(ratio(RPoly::x(), linear(1))));
  CHECK_FALSE(bad.passes);
  bool saw_root = false;
  for (const auto& p : bad.points)
    if (p.kind == PointKind::Root) {
      saw_root = true;
      CHECK(p.d2.real() == doctest::Approx(-2.0));
      CHECK_FALSE(p.second_vanishes);
    }
  CHECK(saw_root);

  const double pi = std::numbers::pi;
  std::vector<double> roots, poles;
  for (int k = -3; k <= 3; ++k) {
    roots.push_back(k * pi);
    poles.push_back(k * pi + pi / 2);
  }
  auto tan_jet = [](double x) {
    const double t = std::tan(x), s2 = 1 + t * t;
    return Jet{t, s2, 2 * s2 * t};
  };
  auto cot_jet = [](double x) {
    const double c = std::cos(x) / std::sin(x), c2 = 1 + c * c;
    return Jet{c, -c2, 2 * c2 * c};
  };
  auto tan_rep = r_condition_check(MeromorphicHandle::callable(tan_jet, cot_jet, roots, poles));
  CHECK(tan_rep.passes);
  CHECK(tan_rep.points.size() == 14);

  CHECK(code_of([&] { MeromorphicHandle::callable(tan_jet, cot_jet, {0.5}, {}); }) == ErrorCode::InvalidArgument);
  CHECK(r_condition_check(MeromorphicHandle::rational(RationalFunction(1))).passes);
}

TEST_CASE("polynomials of degree >= 2 fail") {
  for (int d = 2; d <= 6; ++d) {
    const auto h = MeromorphicHandle::rational(RationalFunction(RPoly::monomial(Rational(1), d)));
    auto rep = r_condition_check(h);
    CHECK_FALSE(rep.passes);
    CHECK(rep.non_simple);
    CHECK(code_of([&] { r_condition_check(h, NonSimplePolicy::Throw); }) == ErrorCode::NonSimpleRoot);
    CHECK(code_of([&] { classify_canonical(h, G(0), G(1)); }) == ErrorCode::UnsupportedPoleOrder);
  }
  // Simple roots but r'' != 0 somewhere.
  const RPoly cubic = RPoly::x() * linear(1) * linear(-1);
  CHECK_FALSE(r_condition_check(MeromorphicHandle::rational(RationalFunction(cubic))).passes);
  const RPoly quad = linear(2) * linear(-3);
  CHECK_FALSE(r_condition_check(MeromorphicHandle::rational(RationalFunction(quad))).passes);
}

TEST_CASE("the Moebius and quadratic-over-linear families fail") {
  std::mt19937 rng(63);
  int checked = 0;
  while (checked < 20) {
    const Rational l1 = random_rational(rng), l2 = random_rational(rng), mu = random_rational(rng);
    if (l1 == l2 || l1 == mu || l2 == mu) continue;
    ++checked;
    const auto r3 = MeromorphicHandle::rational(ratio(linear(l1), linear(l2)));
    const auto r4 = MeromorphicHandle::rational(ratio(linear(l1) * linear(l2), linear(mu)));
    CHECK_FALSE(r_condition_check(r3).passes);
    CHECK_FALSE(r_condition_check(r4).passes);
  }
}

TEST_CASE("canonical_from_r expansions") {
  const auto h = MeromorphicHandle::rational(RationalFunction(RPoly::x()));
  auto a = canonical_from_r(h, G(0));
  CHECK(a.terminating());
  CHECK(a.low() == -2);
  CHECK(a.coeff(-2) == gm({{0, 1}, {0, 0}}));
  CHECK(a.coeff(2) == gm({{0, 0}, {1, 0}}));
  CHECK(a.coeff(0).is_zero());

  // r = x / (x - 1) at its pole: r^2 has a double pole in the (2,1) entry.
  const auto m = MeromorphicHandle::rational(ratio(RPoly::x(), linear(1)));
  auto b = canonical_from_r(m, G(1), 10);
  CHECK(b.center() == G(1));
  CHECK(b.low() == -2);
  CHECK(b.coeff(-2) == gm({{0, 0}, {1, 0}}));
  CHECK(b.coeff(-1) == gm({{0, 0}, {2, 0}}));

  CHECK(code_of([&] { canonical_from_r(h, G(3)); }) == ErrorCode::ExpansionUnavailable);
  CHECK(code_of([&] { canonical_from_r(MeromorphicHandle::rational(RationalFunction(1)), G(0)); }) ==
        ErrorCode::ExpansionUnavailable);
  auto tan_jet = [](double x) { return Jet{std::tan(x), 0, 0}; };
  CHECK(code_of([&] { canonical_from_r(MeromorphicHandle::callable(tan_jet, {}, {0.0}, {}), G(0)); }) ==
        ErrorCode::ExpansionUnavailable);

  CHECK(classify_canonical(h, G(0), G(1)).verdict == Verdict::StrongRegular);
}

TEST_CASE("the r-conditions agree with the classifier at every singular point") {
  std::vector<RationalFunction> cases{
      RationalFunction(RPoly::x()),
      ratio(RPoly(1), RPoly::x()),
      RationalFunction(linear(Rational(5, 2))),
      ratio(RPoly::x(), linear(1)),
      ratio(linear(1), linear(-2)),
      RationalFunction(RPoly::x() * linear(1) * linear(-1)),
      ratio(RPoly(1), RPoly::x() * linear(1) * linear(-1)),
      ratio(RPoly::x(), linear(2) * linear(-2)),
      ratio(linear(3) * linear(-1), linear(Rational(1, 2))),
      RationalFunction(linear(2) * linear(-3)),
  };
  std::mt19937 rng(4);
  for (int extra = 0; extra < 6; ++extra) {
    const Rational a = random_rational(rng), b = random_rational(rng);
    if (a != b) cases.push_back(ratio(linear(a), linear(b)));
  }
  int positives = 0;
  for (const auto& f : cases) {
    const auto h = MeromorphicHandle::rational(f);
    const auto rep = r_condition_check(h);
    positives += rep.passes;
    bool all_strong = true;
    for (const auto& p : rep.points) {
      REQUIRE(p.exact_location);
      for (const auto& rho : kRhos) {
        const bool strong = classify_canonical(h, *p.exact_location, rho).verdict == Verdict::StrongRegular;
        CHECK(strong == p.passes);
        all_strong = all_strong && strong;
      }
    }
    CHECK(all_strong == rep.passes);
  }
  CHECK(positives >= 3);
}
