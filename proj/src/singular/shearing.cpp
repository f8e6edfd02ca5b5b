#include "merostat/singular/shearing.hpp"

#include <string>

#include "merostat/error.hpp"
#include "merostat/exact/spectrum.hpp"

namespace merostat::singular {

LaurentMatrix shearing_step(const LaurentMatrix& a, int q) {
  const int n = a.rows();
  if (q < 1 || q > n) throw Error(ErrorCode::InvalidArgument, "shear size q must lie in [1, n]");
  if (!a.zero() && a.low() < -1) throw Error(ErrorCode::NotJordanAdapted, "shearing needs a first-order pole");
  const ExactMatrix am1 = a.coeff(-1);
  for (int i = n - q; i < n; ++i)
    for (int j = 0; j < n - q; ++j)
      if (!exact::is_zero(am1(i, j)))
        throw Error(ErrorCode::NotJordanAdapted, "residue entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                     ") must vanish before shearing");
  std::vector<int> e(static_cast<size_t>(n), 0);
  for (int i = n - q; i < n; ++i) e[static_cast<size_t>(i)] = 1;
  const LaurentMatrix s = monomial_diagonal(e);
  // S^{-1} is exact, so the result is known one order less than A.
  return gauge_transform(a, s, a.terminating() ? INT_MIN : a.known_to() - 1);
}

namespace {

/// Constant T whose inverse has y as its last row, so that T^{-1} a T has
/// last row lambda e_n^T whenever y a = lambda y.
std::pair<ExactMatrix, ExactMatrix> adapt_to_left_vector(const ExactMatrix& y) {
  const int n = y.cols();
  int pivot = -1;
  for (int j = n - 1; j >= 0; --j)
    if (!exact::is_zero(y(0, j))) {
      pivot = j;
      break;
    }
  ExactMatrix tinv(n, n);
  int row = 0;
  for (int j = 0; j < n; ++j) {
    if (j == pivot) continue;
    tinv(row++, j) = GaussianRational(1);
  }
  for (int j = 0; j < n; ++j) tinv(n - 1, j) = y(0, j);
  auto t = exact::inverse(tinv);
  return {*t, tinv};
}

}  // namespace

ReductionTrace reduce_to_min_spectrum_traced(const LaurentMatrix& a) {
  ReductionTrace tr;
  tr.result = a;
  const int n = a.rows();
  for (int guard = 0; guard < 1000; ++guard) {
    const ExactMatrix am1 = tr.result.coeff(-1);
    const auto spec = exact::integer_spectrum(am1);
    const auto ints = spec.integer_eigenvalues();
    tr.integer_spectra.push_back(ints);
    if (ints.size() <= 1) return tr;
    const long lambda = ints.back();
    // Left eigenvector y: y (a_{-1} - lambda I) = 0.
    const ExactMatrix shifted = am1 - ExactMatrix::identity(n) * GaussianRational(lambda);
    const ExactMatrix y = exact::nullspace(shifted.transpose()).column(0).transpose();
    auto [t, tinv] = adapt_to_left_vector(y);
    LaurentMatrix conj = LaurentMatrix::constant(tinv) * tr.result * LaurentMatrix::constant(t);
    conj.set_center(a.center());
    tr.result = shearing_step(conj, 1);
    ++tr.shears;
  }
  throw Error(ErrorCode::InvalidArgument, "shearing reduction did not terminate");
}

LaurentMatrix reduce_to_min_spectrum(const LaurentMatrix& a) { return reduce_to_min_spectrum_traced(a).result; }

}  // namespace merostat::singular
