#include <random>

#include "doctest.h"
#include "merostat/error.hpp"
#include "merostat/exact/matrix.hpp"
#include "merostat/exact/ratfunc.hpp"
#include "merostat/exact/roots.hpp"
#include "merostat/exact/spectrum.hpp"

using namespace merostat::exact;
using Q = Rational;
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

ExactMatrix random_unimodular(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> pick(0, n - 1), val(-2, 2);
  ExactMatrix t = ExactMatrix::identity(n);
  for (int s = 0; s < 3 * n; ++s) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    ExactMatrix e = ExactMatrix::identity(n);
    e(i, j) = G(val(rng));
    t = t * e;
  }
  return t;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == Q(1, 2));
  CHECK(parse_rational("-0.25") == Q(-1, 4));
  CHECK(parse_rational(" 7 ") == Q(7));
  CHECK(to_string(parse_rational("-2/4")) == "-1/2");
  CHECK(parse_rational("010/3") == Q(10, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), merostat::Error);
  CHECK_THROWS_AS(parse_rational("abc"), merostat::Error);
  CHECK(parse_gaussian("2-3i") == G(Q(2), Q(-3)));
  CHECK(parse_gaussian("i") == G::i());
  CHECK(parse_gaussian("-1/2+i") == G(Q(-1, 2), Q(1)));
}

TEST_CASE("gaussian arithmetic and square roots") {
  G z(Q(3), Q(4));
  CHECK(z * z.conj() == G(25));
  CHECK((z / z) == G(1));
  auto s = exact_sqrt(G(Q(-5), Q(12)));  // (2 + 3i)^2
  REQUIRE(s);
  CHECK(*s * *s == G(Q(-5), Q(12)));
  CHECK_FALSE(exact_sqrt(G(2)));
  CHECK(exact_sqrt(Q(9, 4)) == Q(3, 2));
}

TEST_CASE("polynomial division, gcd and square-free parts") {
  using P = Poly<Q>;
  P x = P::x();
  P a = (x - P(1)) * (x - P(1)) * (x + P(2));
  P b = (x - P(1)) * (x + P(3));
  CHECK(gcd(a, b) == x - P(1));
  auto [q, r] = divmod(a, b);
  CHECK(q * b + r == a);
  auto parts = squarefree_decomposition(a);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == x + P(2));
  CHECK(parts[1] == x - P(1));
  CHECK(squarefree_part(a) == (x - P(1)) * (x + P(2)));
}

TEST_CASE("berkowitz characteristic polynomial agrees with det(lambda I - A)") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> val(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 5;
    RationalMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Q v(val(rng), 1 + (i + j) % 3);
        v.canonicalize();
        a(i, j) = v;
      }
    auto cp = charpoly(a);
    CHECK(cp.degree() == n);
    for (int lam = -2; lam <= 2; ++lam) {
      RationalMatrix m = RationalMatrix::identity(n) * Q(lam) - a;
      CHECK(cp(Q(lam)) == determinant(m));
    }
  }
}

TEST_CASE("integer_spectrum examples") {
  auto rep = integer_spectrum(gm({{-1, 0}, {0, 0}}));
  CHECK(rep.all_integer);
  CHECK(rep.integer_eigenvalues() == std::vector<long>{-1, 0});

  auto rot = integer_spectrum(gm({{0, 1}, {-1, 0}}));
  CHECK_FALSE(rot.all_integer);
  REQUIRE(rot.eigenvalues.size() == 2);
  for (const auto& e : rot.eigenvalues) {
    REQUIRE(e.exact);
    CHECK(*e.exact * *e.exact == G(-1));
  }

  CHECK_THROWS_AS(integer_spectrum(ExactMatrix::identity(9)), merostat::Error);
}

TEST_CASE("integer_spectrum with a symbolic spectral parameter") {
  // Upper triangular pencil: coefficients of det(lambda I - (p + rho q)) are rho-free.
  using P = Poly<Q>;
  Matrix<P> m(2, 2);
  m(0, 0) = P(2);
  m(0, 1) = P(std::vector<Q>{Q(5), Q(7)});
  m(1, 1) = P(-3);
  auto cp = charpoly(m);
  for (const auto& c : cp.coeffs()) CHECK(c.degree() <= 0);
}

TEST_CASE("integer_spectrum properties on random matrices") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + trial % 4;
    ExactMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = G(val(rng));
    auto rep = integer_spectrum(a);
    int total = 0;
    for (const auto& e : rep.eigenvalues) {
      total += e.multiplicity;
      if (e.exact) CHECK(is_zero(rep.charpoly(*e.exact)));
      CHECK(e.residual < 1e-10);
    }
    CHECK(total == n);
  }
}

TEST_CASE("jordan_decomposition examples") {
  auto j1 = jordan_decomposition(gm({{2, 0}, {0, 3}}));
  CHECK(j1.transform == ExactMatrix::identity(2));
  REQUIRE(j1.blocks.size() == 2);
  CHECK(j1.blocks[0].eigenvalue == G(2));
  CHECK(j1.blocks[1].eigenvalue == G(3));

  auto j2 = jordan_decomposition(gm({{1, 1}, {0, 1}}));
  REQUIRE(j2.blocks.size() == 1);
  CHECK(j2.blocks[0].size == 2);

  ExactMatrix a = gm({{1, 1}, {0, 0}});
  auto j3 = jordan_decomposition(a);
  REQUIRE(j3.blocks.size() == 2);
  CHECK(j3.blocks[0].eigenvalue == G(1));
  CHECK(j3.blocks[1].eigenvalue == G(0));
  auto tinv = inverse(j3.transform);
  REQUIRE(tinv);
  CHECK(*tinv * a * j3.transform == j3.jordan_matrix());

  CHECK_THROWS_AS(jordan_decomposition(gm({{0, 2}, {1, 0}})), merostat::Error);
}

TEST_CASE("jordan_decomposition reproduces conjugated Jordan matrices") {
  std::mt19937 rng(3);
  const std::vector<std::vector<JordanBlock>> shapes = {
      {{G(1), 3}},
      {{G(2), 2}, {G(2), 1}},
      {{G(0), 1}, {G(-1), 2}, {G(Q(1, 2)), 1}},
      {{G::i(), 2}, {G(3), 2}},
      {{G(5), 1}, {G(5), 1}, {G(5), 2}},
  };
  for (const auto& blocks : shapes) {
    JordanForm ref;
    ref.blocks = blocks;
    ExactMatrix jm = ref.jordan_matrix();
    const int n = jm.rows();
    ExactMatrix t = random_unimodular(rng, n);
    ExactMatrix a = t * jm * *inverse(t);
    auto jf = jordan_decomposition(a);
    auto tinv = inverse(jf.transform);
    REQUIRE(tinv);
    CHECK(*tinv * a * jf.transform == jf.jordan_matrix());
    CHECK(jf.transform * jf.jordan_matrix() * *tinv == a);
    int total = 0;
    for (const auto& b : jf.blocks) total += b.size;
    CHECK(total == n);
  }
}

TEST_CASE("solve_possibly_singular examples") {
  // M = (-1) I - diag(-1, 0)
  ExactMatrix m = ExactMatrix::identity(2) * G(-1) - gm({{-1, 0}, {0, 0}});
  auto s1 = solve_possibly_singular(m, ExactMatrix(2, 1));
  REQUIRE(s1.feasible);
  REQUIRE(s1.nullspace.cols() == 1);
  CHECK(s1.nullspace == gm({{1}, {0}}));

  auto s2 = solve_possibly_singular(ExactMatrix(2, 2), gm({{1}, {0}}));
  CHECK_FALSE(s2.feasible);

  // Resonance step of the second-order pole example with alpha0 = 1,
  // beta0 = 0, gamma_{-2} = 1, gamma_{-1} = 1, s = 1, t = 0.
  ExactMatrix at_m1 = gm({{1, 1}, {0, 0}});
  ExactMatrix at_0 = gm({{1, 1}, {0, 0}});
  ExactMatrix b0 = gm({{-1, 0}, {1, 0}});
  ExactMatrix lhs = ExactMatrix::identity(2) - at_m1;
  ExactMatrix rhs = at_0 * b0;
  auto s3 = solve_possibly_singular(lhs, rhs);
  REQUIRE(s3.feasible);
  CHECK(lhs * s3.particular == rhs);
  CHECK(lhs * s3.nullspace == ExactMatrix(2, s3.nullspace.cols()));
}

TEST_CASE("solve_possibly_singular properties") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 4;
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = G(val(rng));
    // Zero out a column sometimes to force singularity.
    if (trial % 2) {
      for (int i = 0; i < n; ++i) m(i, 0) = m(i, n - 1);
    }
    ExactMatrix x(n, 2);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < 2; ++j) x(i, j) = G(val(rng));
    ExactMatrix rhs = m * x;
    auto s = solve_possibly_singular(m, rhs);
    REQUIRE(s.feasible);
    CHECK(m * s.particular == rhs);
    CHECK((m * s.nullspace).is_zero());
    CHECK(s.nullspace.cols() == n - rank(m));
  }
}

TEST_CASE("ratfunc_roots_poles examples") {
  using P = Poly<Q>;
  P x = P::x();
  auto r1 = ratfunc_roots_poles(RationalFunction(x));
  REQUIRE(r1.zeros.size() == 1);
  CHECK(*r1.zeros[0].exact == G(0));
  CHECK(r1.poles.empty());

  auto r2 = ratfunc_roots_poles(RationalFunction(x, x - P(1)));
  REQUIRE(r2.zeros.size() == 1);
  REQUIRE(r2.poles.size() == 1);
  CHECK(*r2.poles[0].exact == G(1));
  CHECK(r2.poles[0].multiplicity == 1);

  auto r3 = ratfunc_roots_poles(RationalFunction(1));
  CHECK(r3.zeros.empty());
  CHECK(r3.poles.empty());
}

TEST_CASE("roots of higher degree polynomials") {
  using P = Poly<Q>;
  P x = P::x();
  // (x^3 - 6)(x^2 - 2)(x - 1/3)^2: surds, numeric cubic roots and a double root.
  P cube = x * x * x - P(6);
  P p = cube * (x * x - P(2)) * (x - P(Q(1, 3))) * (x - P(Q(1, 3)));
  auto roots = poly_roots(p);
  int total = 0, surds = 0, numeric = 0;
  for (const auto& r : roots) {
    total += r.multiplicity;
    if (r.surd) ++surds;
    if (!r.is_exact()) {
      ++numeric;
      auto z3 = r.approx * r.approx * r.approx;
      CHECK(std::abs(z3 - 6.0) < 1e-12);
    }
    if (r.exact) {
      CHECK(*r.exact == G(Q(1, 3)));
      CHECK(r.multiplicity == 2);
    }
  }
  CHECK(total == 7);
  CHECK(surds == 2);
  CHECK(numeric == 3);
}

TEST_CASE("roots of a product are the union of the roots") {
  using P = Poly<Q>;
  P x = P::x();
  P a = (x - P(2)) * (x * x + P(1));
  P b = (x + P(Q(1, 2))) * (x - P(2));
  auto ra = poly_roots(a), rb = poly_roots(b), rab = poly_roots(a * b);
  auto count = [](const std::vector<RootInfo>& rs, G v) {
    int c = 0;
    for (const auto& r : rs)
      if (r.exact && *r.exact == v) c += r.multiplicity;
    return c;
  };
  for (G v : {G(2), G(Q(-1, 2)), G::i(), -G::i()}) CHECK(count(rab, v) == count(ra, v) + count(rb, v));
}

TEST_CASE("rational function normalization") {
  using P = Poly<Q>;
  P x = P::x();
  RationalFunction r((x - P(1)) * P(2), (x - P(1)) * (x + P(3)) * P(4));
  CHECK(r.num() == P(Q(1, 2)));
  CHECK(r.den() == x + P(3));
  CHECK(r.derivative() == RationalFunction(P(Q(-1, 2)), (x + P(3)) * (x + P(3))));
  CHECK(r * r.reciprocal() == RationalFunction(1));
}
