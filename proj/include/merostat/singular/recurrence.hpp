#pragma once

// Laurent-series solutions at a first-order pole.
//
// Forward:  W' = A W,  W = sum_{k >= m} b_k t^k,
//           (k I - a_{-1}) b_k = sum_{j >= 0} a_j b_{k-1-j}.
// Inverse:  Y' = -Y A, solved as the forward problem for -A^T and transposed.
//
// The solution space is tracked as b_k = B_k theta with a parameter vector
// theta.  At a resonance (k I - a_{-1} singular) the left null vectors of
// k I - a_{-1} constrain theta and the kernel adds new parameters.

#include <optional>
#include <string>
#include <vector>

#include "merostat/singular/laurent.hpp"

namespace merostat::singular {

struct LaurentSolution {
  int m = 0;  ///< leading exponent (p on the inverse side)
  int M = 0;  ///< greatest integer eigenvalue of the residue the recurrence ran on
  /// n x k (forward) or k x n (inverse) series; column (row) j is the j-th free parameter.
  LaurentMatrix series;
  int parameters = 0;
};

struct RecurrenceResult {
  /// A full-rank Laurent solution exists (parameter count reached n).
  bool feasible = false;
  int dimension = 0;  ///< number of independent Laurent solutions found through order K
  int K = 0;
  int m_min = 0;  ///< smallest integer eigenvalue (largest -p on the inverse side)
  int m_max = 0;
  /// One entry per leading exponent that carries a nonzero chain.
  std::vector<LaurentSolution> solutions;
  /// The n x n fundamental series (W, or Y on the inverse side) when feasible.
  std::optional<LaurentSolution> fundamental;
  /// Orders at which resonance constraints removed parameters.
  std::vector<int> constrained_orders;
  std::vector<std::string> log;
};

/// Throws NoIntegerEigenvalue when a_{-1} has no integer eigenvalue and
/// TruncationTooShort when K < M or the series for A is too short.
RecurrenceResult forward_recurrence(const LaurentMatrix& a, int K);
RecurrenceResult inverse_recurrence(const LaurentMatrix& a, int K);

/// W' == A W through every order determined by the data.
bool satisfies_forward(const LaurentMatrix& a, const LaurentMatrix& w);
/// Y' == -Y A through every order determined by the data.
bool satisfies_inverse(const LaurentMatrix& a, const LaurentMatrix& y);

}  // namespace merostat::singular
