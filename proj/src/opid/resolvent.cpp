#include "merostat/opid/resolvent.hpp"

#include <Eigen/Dense>

#include "merostat/error.hpp"

namespace merostat::opid {

namespace {

RPoly binomial_term(const Rational& c, long j, long s) {
  // c C(j, s) (-t)^{j - s}
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(s));
  Rational coef = c * Rational(binom);
  if ((j - s) % 2) coef = -coef;
  return RPoly::monomial(coef, static_cast<int>(j - s));
}

/// Division-free determinant of a matrix of polynomials (Berkowitz).
RPoly poly_determinant(const exact::Matrix<RPoly>& a) {
  const Poly<RPoly> cp = exact::charpoly(a);
  RPoly c0 = cp.coeff(0);
  return a.rows() % 2 ? -c0 : c0;
}

exact::Matrix<RPoly> replace_column(exact::Matrix<RPoly> a, int s, const std::vector<RPoly>& col) {
  for (int j = 0; j < a.rows(); ++j) a(j, s) = col[static_cast<size_t>(j)];
  return a;
}

/// (f, p_j)_xi as polynomials in xi.
std::vector<RPoly> moments(const RPoly& f, const std::vector<RPoly>& p) {
  std::vector<RPoly> out;
  out.reserve(p.size());
  for (const auto& pj : p) out.push_back((f * pj).antiderivative());
  return out;
}

/// f(xi) - sum_s c_s(xi) xi^s with c_s = d_s / Delta.
RationalFunction diagonal_value(const RPoly& f, const exact::Matrix<RPoly>& a, const RPoly& delta,
                                const std::vector<RPoly>& rhs, std::vector<RPoly>* d_out) {
  RPoly num = f * delta;
  for (int s = 0; s < a.cols(); ++s) {
    RPoly ds = poly_determinant(replace_column(a, s, rhs));
    num -= ds * RPoly::monomial(Rational(1), s);
    if (d_out) d_out->push_back(std::move(ds));
  }
  return RationalFunction(num, delta);
}

}  // namespace

ResolventBundle poly_kernel_resolvent(const RPoly& k) {
  for (int j = 1; j <= k.degree(); j += 2)
    if (sgn(k.coeff(j)) != 0) throw Error(ErrorCode::InvalidArgument, "kernel polynomial must be even");
  if (k.degree() > kMaxSymbolicKernelDegree)
    throw Error(ErrorCode::DimensionTooLarge, "symbolic resolvent is limited to kernel degree " +
                                                  std::to_string(kMaxSymbolicKernelDegree));
  ResolventBundle b;
  b.kernel = k;
  const int top = std::max(k.degree(), 0);
  const int n = top + 1;
  b.p.assign(static_cast<size_t>(n), RPoly());
  for (int s = 0; s <= top; ++s)
    for (int j = s; j <= k.degree(); ++j)
      if (sgn(k.coeff(j)) != 0) b.p[static_cast<size_t>(s)] += binomial_term(k.coeff(j), j, s);

  b.A = exact::Matrix<RPoly>(n, n);
  for (int j = 0; j < n; ++j)
    for (int s = 0; s < n; ++s) {
      RPoly e = (RPoly::monomial(Rational(1), s) * b.p[static_cast<size_t>(j)]).antiderivative();
      if (j == s) e += RPoly(1);
      b.A(j, s) = e;
    }
  b.delta = poly_determinant(b.A);

  b.h2 = diagonal_value(RPoly(1), b.A, b.delta, moments(RPoly(1), b.p), &b.d);
  const RPoly M = k.antiderivative() + RPoly(Rational(1, 2));
  b.h1_direct = diagonal_value(M, b.A, b.delta, moments(M, b.p), nullptr);

  // D_0(xi, t) has column 0 replaced by p_j(t); substituting t = xi commutes
  // with the determinant.
  b.D0_diagonal = poly_determinant(replace_column(b.A, 0, b.p));
  b.gamma0 = RationalFunction(-b.D0_diagonal, b.delta);
  if (b.delta.degree() > 0) b.singular_points = exact::poly_roots(b.delta);
  return b;
}

bool gamma_log_derivative_check(const ResolventBundle& b) { return b.h2.derivative() == b.gamma0 * b.h2; }

RPoly residue_locus(const RationalFunction& f, const Rational& c) {
  const RPoly& q = f.den();
  return exact::gcd(q, f.num() - q.derivative().scaled(c));
}

double resolvent_kernel(const ResolventBundle& b, double xi, double x, double t) {
  const int n = b.A.rows();
  Eigen::MatrixXd a(n, n);
  Eigen::VectorXd col(n);
  for (int j = 0; j < n; ++j) {
    for (int s = 0; s < n; ++s) a(j, s) = b.A(j, s).eval_complex(xi).real();
    col(j) = b.p[static_cast<size_t>(j)].eval_complex(t).real();
  }
  // Cramer's rule in sum form: sum_s D_s x^s / Delta = x_vec . (A^{-1} col).
  const Eigen::VectorXd c = a.partialPivLu().solve(col);
  double s = 0.0, xp = 1.0;
  for (int i = 0; i < n; ++i, xp *= x) s += c(i) * xp;
  return -s;
}

}  // namespace merostat::opid
