#pragma once

// The canonical system W' = rho A(x) W with A = [[0, r^-2], [r^2, 0]] and the
// local conditions on the meromorphic function r that make every singular
// point strong regular:
//   r(x_k) = 0, r'(x_k) != 0, r''(x_k) = 0 at the roots of r,
//   and the same for q = 1/r at the poles of r.

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "merostat/exact/ratfunc.hpp"
#include "merostat/singular/classify.hpp"

namespace merostat::spectral {

using exact::GaussianRational;
using exact::RationalFunction;
using singular::LaurentMatrix;

/// Value and first two derivatives at a point.
struct Jet {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

using JetFunction = std::function<Jet(double)>;

class MeromorphicHandle {
 public:
  /// Roots and poles are found exactly (or certified numerically).
  static MeromorphicHandle rational(RationalFunction r);
  /// User-declared roots and poles of r, verified on construction
  /// (|r(x_k)| < 1e-10 scale).  `q` evaluates 1/r and is needed near the poles.
  static MeromorphicHandle callable(JetFunction r, JetFunction q, std::vector<double> roots,
                                    std::vector<double> poles);

  bool is_rational() const { return rational_.has_value(); }
  const RationalFunction& rational_function() const;
  const JetFunction& r_jet() const { return r_; }
  const JetFunction& q_jet() const { return q_; }
  const std::vector<double>& declared_roots() const { return roots_; }
  const std::vector<double>& declared_poles() const { return poles_; }

 private:
  std::optional<RationalFunction> rational_;
  JetFunction r_, q_;
  std::vector<double> roots_, poles_;
};

enum class PointKind { Root, Pole };

struct PointDiagnostic {
  PointKind kind = PointKind::Root;
  std::complex<double> location;
  std::optional<GaussianRational> exact_location;
  int multiplicity = 1;
  /// Value, first and second derivative of r (roots) or q (poles) there.
  std::complex<double> value, d1, d2;
  bool simple = true;
  bool second_vanishes = false;
  bool passes = false;
  std::string detail;
};

struct RConditionReport {
  bool passes = false;
  bool non_simple = false;  ///< some root or pole has multiplicity > 1
  std::vector<PointDiagnostic> points;
};

enum class NonSimplePolicy { Report, Throw };

/// Exact for rational r (divisibility of r''-numerators); relative tolerance
/// 1e-9 for callables.  Multiple roots or poles lie outside the theorem's
/// hypotheses: they make the check fail with a NonSimpleRoot diagnostic, or
/// throw NonSimpleRoot under NonSimplePolicy::Throw.
RConditionReport r_condition_check(const MeromorphicHandle& r, NonSimplePolicy policy = NonSimplePolicy::Report);

/// Laurent expansion of A = [[0, r^-2], [r^2, 0]] at x0 through `order`.
/// Needs a rational r and an x0 that is a root or pole of r; throws
/// ExpansionUnavailable otherwise.
LaurentMatrix canonical_from_r(const MeromorphicHandle& r, const GaussianRational& x0, int order = 16);

/// Classifies rho A at x0.
singular::ClassificationReport classify_canonical(const MeromorphicHandle& r, const GaussianRational& x0,
                                                  const GaussianRational& rho);

}  // namespace merostat::spectral
