#include <random>

#include "doctest.h"
#include "merostat/error.hpp"
#include "merostat/exact/spectrum.hpp"
#include "merostat/singular/classify.hpp"
#include "merostat/singular/shearing.hpp"

using namespace merostat::singular;
using merostat::ErrorCode;
using merostat::exact::Rational;
using G = GaussianRational;

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

ExactMatrix diag(std::initializer_list<G> d) { return ExactMatrix::diagonal(std::vector<G>(d)); }

std::vector<G> spectrum_of(const ExactMatrix& m) {
  std::vector<G> out;
  for (const auto& e : merostat::exact::integer_spectrum(m).eigenvalues)
    for (int k = 0; k < e.multiplicity; ++k) out.push_back(*e.exact);
  std::sort(out.begin(), out.end(), [](const G& a, const G& b) { return a.re() < b.re(); });
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const merostat::Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

/// Random W = P(t) t^D C with P a product of elementary polynomial matrices.
struct OracleSystem {
  LaurentMatrix W, Winv, A;
};

OracleSystem random_oracle(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> pick(0, n - 1), val(-2, 2), pw(0, 2), ex(-2, 2);
  LaurentMatrix P = LaurentMatrix::identity(n), Pinv = LaurentMatrix::identity(n);
  for (int s = 0; s < 2 * n; ++s) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    ExactMatrix e(n, n);
    e(i, j) = G(val(rng));
    const int k = pw(rng);
    P = P * (LaurentMatrix::identity(n) + LaurentMatrix::monomial(e, k));
    Pinv = (LaurentMatrix::identity(n) - LaurentMatrix::monomial(e, k)) * Pinv;
  }
  std::vector<int> d(static_cast<size_t>(n)), dneg(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    d[static_cast<size_t>(i)] = ex(rng);
    dneg[static_cast<size_t>(i)] = -d[static_cast<size_t>(i)];
  }
  ExactMatrix C = ExactMatrix::identity(n);
  for (int i = 0; i + 1 < n; ++i) C(i, i + 1) = G(val(rng));
  ExactMatrix Cinv = *merostat::exact::inverse(C);
  OracleSystem o;
  o.W = P * monomial_diagonal(d) * LaurentMatrix::constant(C);
  o.Winv = LaurentMatrix::constant(Cinv) * monomial_diagonal(dneg) * Pinv;
  o.A = o.W.derivative() * o.Winv;
  return o;
}

}  // namespace

TEST_CASE("gauge_transform with the identity is a no-op") {
  LaurentMatrix a(-1, {gm({{1, 2}, {3, 4}}), gm({{0, 1}, {1, 0}})});
  LaurentMatrix b = gauge_transform(a, LaurentMatrix::identity(2));
  CHECK(b.equal_through(a, 5));
}

TEST_CASE("gauge_transform reduces the second-order pattern to a first-order pole") {
  const G alpha0(3), beta0(-1), gm2(2), gm1(5), mu2(7);
  LaurentMatrix a = second_order_example(alpha0, beta0, gm2, gm1, mu2);
  LaurentMatrix b = gauge_transform(a, monomial_diagonal({-1, 0}));
  CHECK(b.low() == -1);
  CHECK(b.coeff(-1) == ExactMatrix{{G(1), gm2}, {G(0), G(0)}});
  CHECK(b.coeff(0) == ExactMatrix{{alpha0, gm1}, {G(0), beta0}});
}

TEST_CASE("gauge_transform by a shear has the block residue form") {
  // b_{-1} = diag(J1, Js) with J1 = [[0,1],[0,0]] and Js = (2), plus a_0 coupling.
  ExactMatrix bm1 = gm({{0, 1, 0}, {0, 0, 0}, {0, 0, 2}});
  ExactMatrix b0 = gm({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  LaurentMatrix a(-1, {bm1, b0});
  LaurentMatrix c = gauge_transform(a, monomial_diagonal({0, 0, 1}));
  ExactMatrix expect = gm({{0, 1, 0}, {0, 0, 0}, {7, 8, 1}});
  CHECK(c.coeff(-1) == expect);
}

TEST_CASE("gauge_transform with non-monomial determinant is a truncated series") {
  // F = I + t N with det F = 1 + t, so F^{-1} is an infinite series.
  ExactMatrix n1 = gm({{1, 0}, {0, 0}});
  LaurentMatrix f = LaurentMatrix::identity(2) + LaurentMatrix::monomial(n1, 1);
  LaurentMatrix finv = inverse_series(f, 6);
  CHECK((f * finv).equal_through(LaurentMatrix::identity(2), 6));
  LaurentMatrix a(-1, {gm({{1, 0}, {0, 2}})});
  LaurentMatrix b = gauge_transform(a, f, 6);
  CHECK_FALSE(b.terminating());
  CHECK(b.known_to() >= 5);
  CHECK(code_of([&] { gauge_transform(a, f, 6, 20); }) == ErrorCode::TruncationTooShort);
}

TEST_CASE("forward_recurrence: -I/t gives W = c/t") {
  LaurentMatrix a(-1, {ExactMatrix::identity(2) * G(-1)});
  auto r = forward_recurrence(a, 4);
  REQUIRE(r.feasible);
  CHECK(r.m_min == -1);
  CHECK(r.m_max == -1);
  REQUIRE(r.fundamental);
  const auto& w = r.fundamental->series;
  CHECK(w.low() == -1);
  CHECK(w.high() == -1);
  CHECK(satisfies_forward(a, w));
}

TEST_CASE("forward_recurrence: Katsnelson-Volok data give an m = -1 solution") {
  const G alpha(Rational(3, 2)), beta(-2);
  ExactMatrix am1 = gm({{-1, 0}, {0, 0}});
  ExactMatrix a0 = diag({alpha, beta});
  REQUIRE(katsnelson_volok_check(am1, a0));
  LaurentMatrix a(-1, {am1, a0});
  auto r = forward_recurrence(a, 6);
  REQUIRE(r.feasible);
  bool found = false;
  for (const auto& s : r.solutions) {
    CHECK(satisfies_forward(a, s.series));
    if (s.m == -1) {
      found = true;
      // b_{-1} lies in the range of a_{-1}: (I + a_{-1}) b_{-1} = 0.
      CHECK(((ExactMatrix::identity(2) + am1) * s.series.coeff(-1)).is_zero());
    }
  }
  CHECK(found);
  // Direct substitution of W = a_{-1} c / t + a_0 a_{-1} c for an invertible c.
  ExactMatrix c = gm({{2, 1}, {1, 1}});
  LaurentMatrix w(-1, {am1 * c, a0 * am1 * c}, 0);
  CHECK(w.derivative().equal_through(a * w, -1));
}

TEST_CASE("forward_recurrence: violated resonance condition is infeasible") {
  LaurentMatrix a = second_order_example(G(0), G(0), G(1), G(1));
  LaurentMatrix b = gauge_transform(a, monomial_diagonal({-1, 0}));
  auto r = forward_recurrence(b, 6);
  CHECK_FALSE(r.feasible);
  CHECK(r.dimension == 1);
  REQUIRE_FALSE(r.constrained_orders.empty());
  CHECK(r.constrained_orders.front() == 1);
}

TEST_CASE("forward_recurrence errors") {
  LaurentMatrix a(-1, {diag({G(Rational(1, 2)), G(Rational(1, 3))})});
  CHECK(code_of([&] { forward_recurrence(a, 3); }) == ErrorCode::NoIntegerEigenvalue);
  LaurentMatrix b(-1, {diag({G(0), G(4)})});
  CHECK(code_of([&] { forward_recurrence(b, 3); }) == ErrorCode::TruncationTooShort);
  LaurentMatrix c(-1, {diag({G(0), G(2)}), gm({{1, 1}, {1, 1}})}, 0);
  CHECK(code_of([&] { forward_recurrence(c, 4); }) == ErrorCode::TruncationTooShort);
}

TEST_CASE("inverse_recurrence examples") {
  LaurentMatrix a(-1, {ExactMatrix::identity(2) * G(-1)});
  auto r = inverse_recurrence(a, 4);
  REQUIRE(r.feasible);
  CHECK(r.fundamental->series.low() == 1);
  CHECK(r.fundamental->series.high() == 1);
  CHECK(satisfies_inverse(a, r.fundamental->series));

  LaurentMatrix b(-1, {diag({G(-1), G(0)})});
  auto rb = inverse_recurrence(b, 4);
  REQUIRE(rb.feasible);
  std::vector<int> ps;
  for (const auto& s : rb.solutions) {
    ps.push_back(s.m);
    CHECK(satisfies_inverse(b, s.series));
  }
  CHECK(ps == std::vector<int>{0, 1});

  // Mixed spectrum: the -p side still has the integer eigenvalue 0.
  LaurentMatrix c(-1, {diag({G(Rational(1, 2)), G(0)})});
  auto rc = inverse_recurrence(c, 4);
  CHECK_FALSE(rc.feasible);
  REQUIRE(rc.solutions.size() == 1);
  CHECK(rc.solutions[0].m == 0);
}

TEST_CASE("shearing_step examples") {
  LaurentMatrix a(-1, {diag({G(0), G(2)})});
  auto c = shearing_step(a);
  CHECK(spectrum_of(c.coeff(-1)) == std::vector<G>{G(0), G(1)});

  LaurentMatrix b(-1, {diag({G(0), G(3)})});
  for (int step = 0; step < 3; ++step) b = shearing_step(b);
  CHECK(spectrum_of(b.coeff(-1)) == std::vector<G>{G(0), G(0)});

  LaurentMatrix j(-1, {gm({{1, 1}, {0, 1}})});
  CHECK(spectrum_of(shearing_step(j).coeff(-1)) == std::vector<G>{G(0), G(1)});
  // Shifting the whole block lowers both copies.
  CHECK(spectrum_of(shearing_step(j, 2).coeff(-1)) == std::vector<G>{G(0), G(0)});

  LaurentMatrix bad(-1, {gm({{1, 0}, {1, 2}})});
  CHECK(code_of([&] { shearing_step(bad); }) == ErrorCode::NotJordanAdapted);
}

TEST_CASE("shearing spectrum law on random adapted residues") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 3;
    ExactMatrix am1(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) am1(i, j) = G(val(rng));
    ExactMatrix a0(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a0(i, j) = G(val(rng));
    LaurentMatrix a(-1, {am1, a0});
    auto before = spectrum_of(am1);
    auto after = spectrum_of(shearing_step(a).coeff(-1));
    const G last = am1(n - 1, n - 1);
    auto it = std::find(before.begin(), before.end(), last);
    REQUIRE(it != before.end());
    *it = last - G(1);
    std::sort(before.begin(), before.end(), [](const G& x, const G& y) { return x.re() < y.re(); });
    CHECK(before == after);
  }
}

TEST_CASE("reduce_to_min_spectrum examples") {
  LaurentMatrix z(-1, {diag({G(0), G(0)})});
  CHECK(reduce_to_min_spectrum_traced(z).shears == 0);

  LaurentMatrix a(-1, {diag({G(0), G(2)}), gm({{1, 2}, {3, 4}})});
  auto tr = reduce_to_min_spectrum_traced(a);
  CHECK(tr.shears == 2);
  CHECK(spectrum_of(tr.result.coeff(-1)) == std::vector<G>{G(0), G(0)});

  LaurentMatrix b(-1, {diag({G(Rational(1, 2)), G(3), G(1)}), gm({{1, 0, 1}, {0, 1, 1}, {1, 1, 0}})});
  auto rb = reduce_to_min_spectrum(b);
  auto spec = merostat::exact::integer_spectrum(rb.coeff(-1));
  std::vector<G> values;
  for (const auto& e : spec.eigenvalues)
    for (int k = 0; k < e.multiplicity; ++k) values.push_back(*e.exact);
  std::sort(values.begin(), values.end(), [](const G& x, const G& y) { return x.re() < y.re(); });
  CHECK(values == std::vector<G>{G(Rational(1, 2)), G(1), G(1)});
}

TEST_CASE("katsnelson_volok_check examples") {
  CHECK(katsnelson_volok_check(ExactMatrix(2, 2), gm({{3, 1}, {4, 1}})));
  CHECK(katsnelson_volok_check(gm({{-1, 0}, {0, 0}}), diag({G(5), G(-7)})));
  CHECK_FALSE(katsnelson_volok_check(gm({{-1, 0}, {0, 0}}), gm({{0, 0}, {1, 0}})));
}

TEST_CASE("second_order_pole_check examples") {
  CHECK(second_order_pole_check(second_order_example(G(2), G(1), G(1), G(1))));
  CHECK(second_order_pole_check(second_order_example(G(4), G(4), G(3), G(0))));
  CHECK_FALSE(second_order_pole_check(second_order_example(G(4), G(4), G(5), G(1))));
  LaurentMatrix bad(-2, {gm({{1, 0}, {0, 0}}), ExactMatrix(2, 2), ExactMatrix(2, 2), ExactMatrix(2, 2)});
  CHECK(code_of([&] { second_order_pole_check(bad); }) == ErrorCode::PatternMismatch);
}

TEST_CASE("second_order_pole_check agrees with the classifier") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> val(-3, 3);
  int agree = 0, positive = 0;
  for (int trial = 0; trial < 40; ++trial) {
    G alpha(val(rng)), beta(val(rng)), gm2(val(rng));
    if (gm2.is_zero()) gm2 = G(1);
    // Half the cases satisfy the condition by construction.
    G gm1 = trial % 2 ? gm2 * (alpha - beta) : G(val(rng));
    auto a = second_order_example(alpha, beta, gm2, gm1, G(val(rng)));
    const bool cond = second_order_pole_check(a);
    const auto rep = strong_regularity_classify(a);
    agree += cond == (rep.verdict == Verdict::StrongRegular);
    positive += cond;
  }
  CHECK(agree == 40);
  CHECK(positive >= 20);
}

TEST_CASE("strong_regularity_classify examples") {
  LaurentMatrix half(-1, {diag({G(Rational(1, 2)), G(0)}), gm({{1, 1}, {1, 1}})});
  auto r1 = strong_regularity_classify(half);
  CHECK(r1.verdict == Verdict::NotStrongRegular);
  CHECK(r1.reason == Reason::NonIntegerEigenvalue);

  // W = [[1, 1/t], [0, 1]] gives A = [[0, -t^-2], [0, 0]].
  LaurentMatrix W = LaurentMatrix::identity(2) + LaurentMatrix::monomial(gm({{0, 1}, {0, 0}}), -1);
  LaurentMatrix Winv = LaurentMatrix::identity(2) - LaurentMatrix::monomial(gm({{0, 1}, {0, 0}}), -1);
  LaurentMatrix A = W.derivative() * Winv;
  CHECK(A.low() == -2);
  auto r2 = strong_regularity_classify(A);
  REQUIRE(r2.verdict == Verdict::StrongRegular);
  CHECK(r2.second_order_reduced);
  // The witness differs from W by a constant right factor.
  LaurentMatrix c = Winv * *r2.W;
  CHECK(c.low() == 0);
  CHECK(c.high() == 0);
  CHECK((*r2.W * *r2.W_inv).equal_through(LaurentMatrix::identity(2), r2.K - 2));

  auto r3 = strong_regularity_classify(second_order_example(G(2), G(1), G(1), G(1)));
  CHECK(r3.verdict == Verdict::StrongRegular);

  LaurentMatrix deep(-3, {gm({{0, 1}, {0, 0}})});
  CHECK(code_of([&] { strong_regularity_classify(deep); }) == ErrorCode::UnsupportedPoleOrder);

  LaurentMatrix short_k(-1, {diag({G(0), G(6)})});
  CHECK(strong_regularity_classify(short_k, 3).verdict == Verdict::Inconclusive);
}

TEST_CASE("the mirrored second-order pattern is recognised") {
  // Swapping the coordinates moves the double pole into a_21.
  const ExactMatrix s = gm({{0, 1}, {1, 0}});
  LaurentMatrix a =
      LaurentMatrix::constant(s) * second_order_example(G(2), G(1), G(1), G(1)) * LaurentMatrix::constant(s);
  auto p = match_second_order_pattern(a);
  CHECK(p.transposed);
  CHECK(p.alpha0 == G(2));
  CHECK(second_order_pole_check(a));
  CHECK(strong_regularity_classify(a).verdict == Verdict::StrongRegular);
  // The plain transpose swaps the roles of alpha_0 and beta_0.
  CHECK_FALSE(second_order_pole_check(second_order_example(G(2), G(1), G(1), G(1)).transpose()));
}

TEST_CASE("oracle systems A = W' W^{-1} are strong regular") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 3;
    auto o = random_oracle(rng, n);
    REQUIRE((o.W * o.Winv).equal_through(LaurentMatrix::identity(n), 10));
    CHECK(o.A.low() >= -1);
    auto rep = strong_regularity_classify(o.A);
    CHECK(rep.verdict == Verdict::StrongRegular);
    CHECK(rep.distinct_eigenvalue_check);
    REQUIRE(rep.W);
    CHECK((*rep.W * *rep.W_inv).equal_through(LaurentMatrix::identity(n), rep.K));
    CHECK(satisfies_forward(o.A, *rep.W));
  }
}

TEST_CASE("non-integer perturbations are rejected") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> val(-3, 3), den(2, 7);
  for (int trial = 0; trial < 20; ++trial) {
    Rational q(val(rng) * den(rng) + 1, den(rng) + 10);
    q.canonicalize();
    if (merostat::exact::is_integer(q)) q += Rational(1, 2);
    ExactMatrix am1 = diag({G(q), G(val(rng)), G(val(rng))});
    ExactMatrix a0(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a0(i, j) = G(val(rng));
    auto rep = strong_regularity_classify(LaurentMatrix(-1, {am1, a0}));
    CHECK(rep.verdict == Verdict::NotStrongRegular);
    CHECK(rep.reason == Reason::NonIntegerEigenvalue);
  }
}

TEST_CASE("classification is invariant under constant gauges") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> val(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 2;
    LaurentMatrix a;
    if (trial % 2) {
      a = random_oracle(rng, n).A;
    } else {
      ExactMatrix am1(n, n), a0(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (j >= i) am1(i, j) = G(val(rng));
          a0(i, j) = G(val(rng));
        }
      a = LaurentMatrix(-1, {am1, a0});
    }
    ExactMatrix f = ExactMatrix::identity(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) f(i, j) = G(val(rng));
    if (merostat::exact::determinant(f).is_zero()) continue;
    auto v1 = strong_regularity_classify(a).verdict;
    auto v2 = strong_regularity_classify(gauge_transform(a, LaurentMatrix::constant(f))).verdict;
    CHECK(v1 == v2);
  }
}
