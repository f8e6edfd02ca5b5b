#include "merostat/singular/classify.hpp"

#include <string>

#include "merostat/error.hpp"
#include "merostat/exact/spectrum.hpp"

namespace merostat::singular {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::StrongRegular: return "StrongRegular";
    case Verdict::NotStrongRegular: return "NotStrongRegular";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::string to_string(Reason r) {
  switch (r) {
    case Reason::None: return "None";
    case Reason::NonIntegerEigenvalue: return "NonIntegerEigenvalue";
    case Reason::RecurrenceInfeasible: return "RecurrenceInfeasible";
    case Reason::ProductCheckFailed: return "ProductCheckFailed";
    case Reason::ExactArithmeticUnavailable: return "ExactArithmeticUnavailable";
    case Reason::TruncationExhausted: return "TruncationExhausted";
  }
  return "None";
}

bool katsnelson_volok_check(const ExactMatrix& am1, const ExactMatrix& a0) {
  if (!am1.square() || am1.rows() != a0.rows() || !a0.square())
    throw Error(ErrorCode::InvalidArgument, "katsnelson_volok_check needs square matrices of equal size");
  return am1 * am1 == -am1 && am1 * a0 * am1 == -(a0 * am1);
}

namespace {

ExactMatrix swap2() { return ExactMatrix{{GaussianRational(0), GaussianRational(1)}, {GaussianRational(1), GaussianRational(0)}}; }

bool entry_zero_on(const LaurentMatrix& a, int i, int j, int from, int to) {
  for (int k = from; k <= to; ++k)
    if (!exact::is_zero(a.coeff(k)(i, j))) return false;
  return true;
}

std::optional<SecondOrderPattern> try_pattern(const LaurentMatrix& a) {
  if (exact::is_zero(a.coeff(-2)(0, 1))) return std::nullopt;
  if (!entry_zero_on(a, 0, 0, -2, -1) || !entry_zero_on(a, 1, 1, -2, -1)) return std::nullopt;
  if (!entry_zero_on(a, 1, 0, -2, 1)) return std::nullopt;
  SecondOrderPattern p;
  p.alpha0 = a.coeff(0)(0, 0);
  p.beta0 = a.coeff(0)(1, 1);
  p.gamma_m2 = a.coeff(-2)(0, 1);
  p.gamma_m1 = a.coeff(-1)(0, 1);
  return p;
}

LaurentMatrix conjugate_constant(const LaurentMatrix& a, const ExactMatrix& t, const ExactMatrix& tinv) {
  LaurentMatrix out = LaurentMatrix::constant(tinv) * a * LaurentMatrix::constant(t);
  out.set_center(a.center());
  return out;
}

}  // namespace

SecondOrderPattern match_second_order_pattern(const LaurentMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2) throw Error(ErrorCode::PatternMismatch, "second-order pattern needs a 2x2 system");
  if (a.zero() || a.low() != -2) throw Error(ErrorCode::PatternMismatch, "second-order pattern needs a pole of order exactly 2");
  if (a.known_to() < 1) throw Error(ErrorCode::TruncationTooShort, "second-order pattern needs coefficients through order 1");
  if (auto p = try_pattern(a)) return *p;
  if (auto p = try_pattern(conjugate_constant(a, swap2(), swap2()))) {
    p->transposed = true;
    return *p;
  }
  throw Error(ErrorCode::PatternMismatch,
              "second-order pole outside the supported pattern (double pole in one off-diagonal entry, "
              "holomorphic diagonal, other off-diagonal entry O(t^2))");
}

bool second_order_pole_check(const LaurentMatrix& a) {
  const auto p = match_second_order_pattern(a);
  return p.gamma_m2 * (p.alpha0 - p.beta0) == p.gamma_m1;
}

LaurentMatrix second_order_example(const GaussianRational& alpha0, const GaussianRational& beta0,
                                   const GaussianRational& gamma_m2, const GaussianRational& gamma_m1,
                                   const GaussianRational& mu2) {
  ExactMatrix am2(2, 2), am1(2, 2), a0(2, 2), a1(2, 2), a2(2, 2);
  am2(0, 1) = gamma_m2;
  am1(0, 1) = gamma_m1;
  a0(0, 0) = alpha0;
  a0(1, 1) = beta0;
  a2(1, 0) = mu2;
  return LaurentMatrix(-2, {am2, am1, a0, a1, a2});
}

ClassificationReport strong_regularity_classify(const LaurentMatrix& a, std::optional<int> K) {
  ClassificationReport rep;
  const int n = a.rows();
  const int lowest = a.zero() ? 0 : a.low();
  if (lowest < -2)
    throw Error(ErrorCode::UnsupportedPoleOrder, "pole of order " + std::to_string(-lowest) + " is not supported");

  LaurentMatrix sys = a;
  LaurentMatrix gauge = LaurentMatrix::identity(n);
  LaurentMatrix gauge_inv = LaurentMatrix::identity(n);
  if (lowest == -2) {
    const auto pat = match_second_order_pattern(a);
    if (pat.transposed) {
      sys = conjugate_constant(sys, swap2(), swap2());
      gauge = LaurentMatrix::constant(swap2());
      gauge_inv = gauge;
    }
    const LaurentMatrix f = monomial_diagonal({-1, 0});
    sys = gauge_transform(sys, f);
    gauge = gauge * f;
    gauge_inv = monomial_diagonal({1, 0}) * gauge_inv;
    rep.second_order_reduced = true;
  }
  rep.reduced_system = sys;

  if (n > exact::kMaxExactDimension) {
    rep.verdict = Verdict::Inconclusive;
    rep.reason = Reason::ExactArithmeticUnavailable;
    rep.detail = "dimension above the exact eigenstructure bound";
    return rep;
  }
  const ExactMatrix am1 = sys.coeff(-1);
  const auto spec = exact::integer_spectrum(am1);
  rep.integer_eigenvalues = spec.integer_eigenvalues();
  if (!spec.all_integer) {
    rep.verdict = Verdict::NotStrongRegular;
    rep.reason = Reason::NonIntegerEigenvalue;
    rep.detail = "residue matrix has a non-integer eigenvalue; characteristic polynomial " + exact::to_string(spec.charpoly);
    return rep;
  }
  const int m_low = static_cast<int>(rep.integer_eigenvalues.front());
  const int M = static_cast<int>(rep.integer_eigenvalues.back());
  const int Kc = K.value_or(M + n + 5);
  rep.K = Kc;
  if (Kc < M) {
    rep.verdict = Verdict::Inconclusive;
    rep.reason = Reason::TruncationExhausted;
    rep.detail = "truncation order below the greatest integer eigenvalue";
    return rep;
  }

  try {
    // Y starts at order -M and W at m_low; these orders make Y W known through Kc.
    const auto fw = forward_recurrence(sys, Kc + M);
    if (!fw.feasible) {
      rep.verdict = Verdict::NotStrongRegular;
      rep.reason = Reason::RecurrenceInfeasible;
      rep.detail = "forward recurrence yields " + std::to_string(fw.dimension) + " of " + std::to_string(n) +
                   " Laurent solutions (resonance constraints at orders";
      for (int k : fw.constrained_orders) rep.detail += " " + std::to_string(k);
      rep.detail += ")";
      return rep;
    }
    const auto inv = inverse_recurrence(sys, Kc - m_low);
    if (!inv.feasible) {
      rep.verdict = Verdict::NotStrongRegular;
      rep.reason = Reason::RecurrenceInfeasible;
      rep.detail = "inverse recurrence yields " + std::to_string(inv.dimension) + " of " + std::to_string(n) + " solutions";
      return rep;
    }
    const LaurentMatrix& W = fw.fundamental->series;
    const LaurentMatrix& Y = inv.fundamental->series;
    const LaurentMatrix YW = Y * W;
    const ExactMatrix G = YW.coeff(0);
    const auto Ginv = exact::inverse(G);
    if (!Ginv || !YW.equal_through(LaurentMatrix::constant(G), Kc)) {
      rep.verdict = Verdict::NotStrongRegular;
      rep.reason = Reason::ProductCheckFailed;
      rep.detail = "Y W is not an invertible constant through order " + std::to_string(Kc);
      return rep;
    }
    const LaurentMatrix Winv = LaurentMatrix::constant(*Ginv) * Y;
    if (!(W * Winv).equal_through(LaurentMatrix::identity(n), Kc)) {
      rep.verdict = Verdict::NotStrongRegular;
      rep.reason = Reason::ProductCheckFailed;
      rep.detail = "W W^{-1} differs from I below order " + std::to_string(Kc);
      return rep;
    }
    rep.W = gauge * W;
    rep.W_inv = Winv * gauge_inv;
    rep.verdict = Verdict::StrongRegular;
    rep.distinct_eigenvalue_check = am1.is_scalar() || rep.integer_eigenvalues.size() >= 2;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TruncationTooShort) throw;
    rep.verdict = Verdict::Inconclusive;
    rep.reason = Reason::TruncationExhausted;
    rep.detail = e.what();
  }
  return rep;
}

}  // namespace merostat::singular
