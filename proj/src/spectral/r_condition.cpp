#include "merostat/spectral/r_condition.hpp"

#include <algorithm>
#include <cmath>

#include "merostat/error.hpp"
#include "merostat/exact/roots.hpp"

namespace merostat::spectral {

using exact::Poly;
using exact::Rational;
using GPoly = Poly<GaussianRational>;
using singular::ExactMatrix;

namespace {

constexpr double kDeclaredTol = 1e-10;
constexpr double kCallableTol = 1e-9;

std::string describe(const std::complex<double>& z) {
  char buf[64];
  if (z.imag() == 0.0) std::snprintf(buf, sizeof buf, "%.12g", z.real());
  else std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

/// Diagnostics for the zeros of f = n / d (a root of r, or a pole via q = d / n).
void rational_points(const Poly<Rational>& n, const Poly<Rational>& d, PointKind kind, RConditionReport& rep) {
  if (n.degree() <= 0) return;
  const GPoly ng = exact::to_gaussian(n), dg = exact::to_gaussian(d);
  const GPoly n1 = ng.derivative(), n2 = n1.derivative(), d1 = dg.derivative(), d2 = d1.derivative();
  // At a zero of n the second derivative of n/d equals (n'' d - 2 n' d') / d^2.
  const GPoly e = n2 * dg - (n1 * d1).scaled(GaussianRational(2));
  const GPoly pass_factor = exact::gcd(exact::squarefree_part(ng), e);
  const auto passing = pass_factor.degree() > 0 ? exact::poly_roots(pass_factor) : std::vector<exact::RootInfo>{};

  for (const auto& root : exact::poly_roots(ng)) {
    PointDiagnostic pd;
    pd.kind = kind;
    pd.location = root.approx;
    pd.exact_location = root.exact;
    pd.multiplicity = root.multiplicity;
    const auto z = root.approx;
    const auto nv = ng.eval_complex(z), nv1 = n1.eval_complex(z), nv2 = n2.eval_complex(z);
    const auto dv = dg.eval_complex(z), dv1 = d1.eval_complex(z), dv2 = d2.eval_complex(z);
    pd.value = nv / dv;
    pd.d1 = (nv1 * dv - nv * dv1) / (dv * dv);
    pd.d2 = ((nv2 * dv - nv * dv2) * dv - 2.0 * dv1 * (nv1 * dv - nv * dv1)) / (dv * dv * dv);
    pd.simple = root.multiplicity == 1;
    if (root.exact) {
      pd.second_vanishes = e(*root.exact).is_zero();
    } else {
      const double tol = 1e-6 * std::max(1.0, std::abs(z));
      pd.second_vanishes = std::any_of(passing.begin(), passing.end(),
                                       [&](const exact::RootInfo& p) { return std::abs(p.approx - z) <= tol; });
    }
    pd.passes = pd.simple && pd.second_vanishes;
    const std::string fn = kind == PointKind::Root ? "r" : "q";
    if (!pd.simple) {
      rep.non_simple = true;
      pd.detail = "NonSimpleRoot: multiplicity " + std::to_string(root.multiplicity) + " at " + describe(z);
    } else if (!pd.second_vanishes) {
      pd.detail = fn + "'' = " + describe(pd.d2) + " != 0 at " + describe(z);
    }
    rep.points.push_back(std::move(pd));
  }
}

void callable_point(const JetFunction& f, double x, PointKind kind, RConditionReport& rep) {
  const Jet j = f(x);
  PointDiagnostic pd;
  pd.kind = kind;
  pd.location = x;
  pd.value = j.value;
  pd.d1 = j.d1;
  pd.d2 = j.d2;
  pd.simple = std::abs(j.d1) > kCallableTol * std::max(1.0, std::abs(j.d2));
  pd.second_vanishes = std::abs(j.d2) <= kCallableTol * std::max(1.0, std::abs(j.d1));
  const bool value_ok = std::abs(j.value) <= kCallableTol * std::max(1.0, std::abs(j.d1));
  pd.passes = value_ok && pd.simple && pd.second_vanishes;
  const std::string fn = kind == PointKind::Root ? "r" : "q";
  if (!pd.simple) {
    pd.multiplicity = 2;
    rep.non_simple = true;
    pd.detail = "NonSimpleRoot: " + fn + "' vanishes at " + describe(pd.location);
  } else if (!value_ok) {
    pd.detail = fn + " = " + describe(pd.value) + " != 0 at " + describe(pd.location);
  } else if (!pd.second_vanishes) {
    pd.detail = fn + "'' = " + describe(pd.d2) + " != 0 at " + describe(pd.location);
  }
  rep.points.push_back(std::move(pd));
}

/// Coefficients of p / q at t = 0 from order `low` through `order`, with a
/// flag telling whether the expansion terminates.
struct ScalarLaurent {
  int low = 0;
  std::vector<GaussianRational> c;
  bool exact = false;
};

ScalarLaurent laurent_of_quotient(const GPoly& p, const GPoly& q, int order) {
  const int vp = p.valuation(), vq = q.valuation();
  const GPoly a = GPoly(std::vector<GaussianRational>(p.coeffs().begin() + vp, p.coeffs().end()));
  const GPoly u = GPoly(std::vector<GaussianRational>(q.coeffs().begin() + vq, q.coeffs().end()));
  ScalarLaurent out;
  out.low = vp - vq;
  out.exact = u.degree() == 0;
  const int count = out.exact ? a.degree() + 1 : std::max(0, order - out.low + 1);
  const GaussianRational inv_u0 = GaussianRational(1) / u.coeff(0);
  for (int k = 0; k < count; ++k) {
    GaussianRational s = a.coeff(k);
    for (int j = 1; j <= std::min(k, u.degree()); ++j) s -= u.coeff(j) * out.c[static_cast<size_t>(k - j)];
    out.c.push_back(s * inv_u0);
  }
  return out;
}

}  // namespace

MeromorphicHandle MeromorphicHandle::rational(RationalFunction r) {
  MeromorphicHandle h;
  h.rational_ = r;
  const RationalFunction dr = r.derivative(), ddr = dr.derivative();
  h.r_ = [r, dr, ddr](double x) {
    return Jet{r.eval_complex(x).real(), dr.eval_complex(x).real(), ddr.eval_complex(x).real()};
  };
  if (!r.zero()) {
    const RationalFunction q = r.reciprocal(), dq = q.derivative(), ddq = dq.derivative();
    h.q_ = [q, dq, ddq](double x) {
      return Jet{q.eval_complex(x).real(), dq.eval_complex(x).real(), ddq.eval_complex(x).real()};
    };
  }
  const auto rp = exact::ratfunc_roots_poles(r);
  for (const auto& z : rp.zeros)
    if (std::abs(z.approx.imag()) < 1e-12) h.roots_.push_back(z.approx.real());
  for (const auto& p : rp.poles)
    if (std::abs(p.approx.imag()) < 1e-12) h.poles_.push_back(p.approx.real());
  return h;
}

MeromorphicHandle MeromorphicHandle::callable(JetFunction r, JetFunction q, std::vector<double> roots,
                                              std::vector<double> poles) {
  if (!r) throw Error(ErrorCode::InvalidArgument, "callable handle needs r");
  if (!poles.empty() && !q) throw Error(ErrorCode::InvalidArgument, "callable handle with poles needs q = 1/r");
  for (double x : roots) {
    const Jet j = r(x);
    if (!(std::abs(j.value) < kDeclaredTol * std::max(1.0, std::abs(j.d1))))
      throw Error(ErrorCode::InvalidArgument, "declared root " + describe(x) + " is not a root of r");
  }
  for (double y : poles) {
    const Jet j = q(y);
    if (!(std::abs(j.value) < kDeclaredTol * std::max(1.0, std::abs(j.d1))))
      throw Error(ErrorCode::InvalidArgument, "declared pole " + describe(y) + " is not a root of 1/r");
  }
  MeromorphicHandle h;
  h.r_ = std::move(r);
  h.q_ = std::move(q);
  h.roots_ = std::move(roots);
  h.poles_ = std::move(poles);
  return h;
}

const RationalFunction& MeromorphicHandle::rational_function() const {
  if (!rational_) throw Error(ErrorCode::ExpansionUnavailable, "handle is not a rational function");
  return *rational_;
}

RConditionReport r_condition_check(const MeromorphicHandle& r, NonSimplePolicy policy) {
  RConditionReport rep;
  if (r.is_rational()) {
    const auto& f = r.rational_function();
    if (f.zero()) throw Error(ErrorCode::InvalidArgument, "r must not vanish identically");
    rational_points(f.num(), f.den(), PointKind::Root, rep);
    rational_points(f.den(), f.num(), PointKind::Pole, rep);
  } else {
    for (double x : r.declared_roots()) callable_point(r.r_jet(), x, PointKind::Root, rep);
    for (double y : r.declared_poles()) callable_point(r.q_jet(), y, PointKind::Pole, rep);
  }
  if (rep.non_simple && policy == NonSimplePolicy::Throw) {
    for (const auto& p : rep.points)
      if (!p.simple) throw Error(ErrorCode::NonSimpleRoot, p.detail);
  }
  rep.passes = !rep.non_simple && std::all_of(rep.points.begin(), rep.points.end(), [](const auto& p) { return p.passes; });
  return rep;
}

LaurentMatrix canonical_from_r(const MeromorphicHandle& r, const GaussianRational& x0, int order) {
  if (!r.is_rational())
    throw Error(ErrorCode::ExpansionUnavailable, "callable handles carry no series data");
  const auto& f = r.rational_function();
  const GPoly n = exact::to_gaussian(f.num()).shifted(x0);
  const GPoly d = exact::to_gaussian(f.den()).shifted(x0);
  if (n.zero() || (!n.coeff(0).is_zero() && !d.coeff(0).is_zero()))
    throw Error(ErrorCode::ExpansionUnavailable, "x0 is neither a root nor a pole of r");
  const auto r2 = laurent_of_quotient(n * n, d * d, order);
  const auto rm2 = laurent_of_quotient(d * d, n * n, order);
  const bool exact = r2.exact && rm2.exact;
  const int low = std::min(r2.low, rm2.low);
  const int high = exact ? std::max(r2.low + static_cast<int>(r2.c.size()), rm2.low + static_cast<int>(rm2.c.size())) - 1
                         : order;
  std::vector<ExactMatrix> coeffs;
  for (int k = low; k <= high; ++k) {
    ExactMatrix m(2, 2);
    const int i12 = k - rm2.low, i21 = k - r2.low;
    if (i12 >= 0 && i12 < static_cast<int>(rm2.c.size())) m(0, 1) = rm2.c[static_cast<size_t>(i12)];
    if (i21 >= 0 && i21 < static_cast<int>(r2.c.size())) m(1, 0) = r2.c[static_cast<size_t>(i21)];
    coeffs.push_back(std::move(m));
  }
  return LaurentMatrix(low, std::move(coeffs), exact ? singular::kExactOrder : order, x0);
}

singular::ClassificationReport classify_canonical(const MeromorphicHandle& r, const GaussianRational& x0,
                                                  const GaussianRational& rho) {
  const LaurentMatrix a = canonical_from_r(r, x0);
  return singular::strong_regularity_classify(a * (ExactMatrix::identity(2) * rho));
}

}  // namespace merostat::spectral
