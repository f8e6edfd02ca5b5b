#include "merostat/singular/recurrence.hpp"

#include <algorithm>
#include <string>

#include "merostat/error.hpp"
#include "merostat/exact/spectrum.hpp"

namespace merostat::singular {

namespace {

using exact::rank;

ExactMatrix append_zero_cols(const ExactMatrix& b, int q) {
  if (q == 0) return b;
  return b.hcat(ExactMatrix(b.rows(), q));
}

ExactMatrix columns_times(const ExactMatrix& b, const ExactMatrix& z) {
  if (b.cols() == 0 || z.cols() == 0) return ExactMatrix(b.rows(), z.cols());
  return b * z;
}

LaurentMatrix assemble(int low, const std::vector<ExactMatrix>& b, int known_to) {
  return LaurentMatrix(low, b, known_to);
}

}  // namespace

RecurrenceResult forward_recurrence(const LaurentMatrix& a, int K) {
  const int n = a.rows();
  if (!a.zero() && a.low() < -1)
    throw Error(ErrorCode::InvalidArgument, "recurrence needs at most a first-order pole; reduce the pole order first");
  const ExactMatrix am1 = a.coeff(-1);
  const auto spec = exact::integer_spectrum(am1);
  const auto ints = spec.integer_eigenvalues();
  if (ints.empty()) throw Error(ErrorCode::NoIntegerEigenvalue, "residue matrix has no integer eigenvalue");
  const int m0 = static_cast<int>(ints.front());
  const int M = static_cast<int>(ints.back());
  if (K < M)
    throw Error(ErrorCode::TruncationTooShort,
                "truncation order " + std::to_string(K) + " below greatest integer eigenvalue " + std::to_string(M));

  RecurrenceResult res;
  res.K = K;
  res.m_min = m0;
  res.m_max = M;

  const ExactMatrix id = ExactMatrix::identity(n);
  std::vector<ExactMatrix> B;
  B.push_back(exact::nullspace(id * GaussianRational(m0) - am1));
  int P = B.back().cols();
  res.log.push_back("order " + std::to_string(m0) + ": " + std::to_string(P) + " leading parameter(s)");

  for (int k = m0 + 1; k <= K; ++k) {
    ExactMatrix R(n, P);
    for (int j = 0; j <= k - 1 - m0; ++j) {
      const ExactMatrix aj = a.coeff(j);
      if (aj.is_zero() || P == 0) continue;
      R += aj * B[static_cast<size_t>(k - 1 - j - m0)];
    }
    const ExactMatrix Mk = id * GaussianRational(k) - am1;
    const ExactMatrix left = exact::nullspace(Mk.transpose());
    if (left.cols() > 0 && P > 0) {
      // Consistency: every left null vector y must satisfy y R theta = 0.
      const ExactMatrix C = left.transpose() * R;
      if (!C.is_zero()) {
        const ExactMatrix Z = exact::nullspace(C);
        for (auto& bj : B) bj = columns_times(bj, Z);
        R = columns_times(R, Z);
        res.constrained_orders.push_back(k);
        res.log.push_back("order " + std::to_string(k) + ": resonance constraint, parameters " + std::to_string(P) +
                          " -> " + std::to_string(Z.cols()));
        P = Z.cols();
      }
    }
    auto sol = exact::solve_possibly_singular(Mk, R);
    if (!sol.feasible) throw Error(ErrorCode::InvalidArgument, "internal: resonance system inconsistent after restriction");
    const int q = sol.nullspace.cols();
    ExactMatrix bk = P > 0 ? sol.particular : ExactMatrix(n, 0);
    if (q > 0) {
      for (auto& bj : B) bj = append_zero_cols(bj, q);
      bk = bk.hcat(sol.nullspace);
      res.log.push_back("order " + std::to_string(k) + ": resonance adds " + std::to_string(q) + " parameter(s)");
      P += q;
    }
    B.push_back(std::move(bk));
  }

  res.dimension = P;
  res.feasible = P == n;
  if (P == 0) return res;

  const LaurentMatrix W = assemble(m0, B, K);
  for (int m : ints) {
    if (m > K) break;
    // Parameters whose chain starts exactly at order m.
    ExactMatrix V = ExactMatrix::identity(P);
    if (m > m0) {
      ExactMatrix stacked(0, P);
      for (int j = m0; j < m; ++j) stacked = stacked.vcat(B[static_cast<size_t>(j - m0)]);
      V = exact::nullspace(stacked);
    }
    if (V.cols() == 0) continue;
    const ExactMatrix bm = B[static_cast<size_t>(m - m0)] * V;
    if (bm.is_zero()) continue;
    LaurentSolution s;
    s.m = m;
    s.M = M;
    s.series = W * LaurentMatrix::constant(V);
    s.parameters = V.cols();
    res.solutions.push_back(std::move(s));
  }
  if (res.feasible) {
    LaurentSolution f;
    f.m = W.low();
    f.M = M;
    f.series = W;
    f.parameters = n;
    res.fundamental = std::move(f);
  }
  return res;
}

RecurrenceResult inverse_recurrence(const LaurentMatrix& a, int K) {
  RecurrenceResult res = forward_recurrence((-a).transpose(), K);
  for (auto& s : res.solutions) s.series = s.series.transpose();
  if (res.fundamental) res.fundamental->series = res.fundamental->series.transpose();
  return res;
}

bool satisfies_forward(const LaurentMatrix& a, const LaurentMatrix& w) {
  const LaurentMatrix lhs = w.derivative();
  const LaurentMatrix rhs = a * w;
  const int k = std::min(lhs.known_to(), rhs.known_to());
  if (k == kExactOrder) return (lhs - rhs).zero();
  return lhs.equal_through(rhs, k);
}

bool satisfies_inverse(const LaurentMatrix& a, const LaurentMatrix& y) {
  const LaurentMatrix lhs = y.derivative();
  const LaurentMatrix rhs = -(y * a);
  const int k = std::min(lhs.known_to(), rhs.known_to());
  if (k == kExactOrder) return (lhs - rhs).zero();
  return lhs.equal_through(rhs, k);
}

}  // namespace merostat::singular
