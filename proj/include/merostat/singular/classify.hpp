#pragma once

// Strong-regularity classification of a singular point x0 of W' = A W.

#include <optional>
#include <string>

#include "merostat/singular/recurrence.hpp"

namespace merostat::singular {

enum class Verdict { StrongRegular, NotStrongRegular, Inconclusive };
enum class Reason { None, NonIntegerEigenvalue, RecurrenceInfeasible, ProductCheckFailed, ExactArithmeticUnavailable, TruncationExhausted };

std::string to_string(Verdict v);
std::string to_string(Reason r);

struct ClassificationReport {
  Verdict verdict = Verdict::Inconclusive;
  Reason reason = Reason::None;
  std::string detail;
  int K = 0;
  bool second_order_reduced = false;  ///< the input went through the diag(1/t, 1) gauge
  std::vector<long> integer_eigenvalues;
  /// Witnesses for the original system (present iff StrongRegular).
  std::optional<LaurentMatrix> W;
  std::optional<LaurentMatrix> W_inv;
  /// Several distinct integer eigenvalues or scalar residue (checked on certified cases).
  bool distinct_eigenvalue_check = true;
  /// The first-order system the recurrences ran on.
  std::optional<LaurentMatrix> reduced_system;
};

/// Default truncation: M + n + 5.
ClassificationReport strong_regularity_classify(const LaurentMatrix& a, std::optional<int> K = std::nullopt);

/// a_{-1}^2 = -a_{-1} and a_{-1} a_0 a_{-1} = -a_0 a_{-1}.
bool katsnelson_volok_check(const ExactMatrix& am1, const ExactMatrix& a0);

/// Entry data of the second-order pole pattern.
struct SecondOrderPattern {
  GaussianRational alpha0, beta0, gamma_m2, gamma_m1;
  bool transposed = false;  ///< the double pole sits in a_21 instead of a_12
};

/// Recognises the pattern (or its mirror image); throws PatternMismatch otherwise.
SecondOrderPattern match_second_order_pattern(const LaurentMatrix& a);

/// gamma_{-2} (alpha_0 - beta_0) == gamma_{-1}.
bool second_order_pole_check(const LaurentMatrix& a);

/// Builds A with a_11 = alpha0, a_22 = beta0, a_12 = gamma_{-2} t^{-2} + gamma_{-1} t^{-1},
/// a_21 = mu2 t^2.
LaurentMatrix second_order_example(const GaussianRational& alpha0, const GaussianRational& beta0,
                                   const GaussianRational& gamma_m2, const GaussianRational& gamma_m1,
                                   const GaussianRational& mu2 = GaussianRational(0));

}  // namespace merostat::singular
