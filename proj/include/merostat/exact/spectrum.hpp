#pragma once

// Exact eigenstructure of small matrices over Q(i).

#include <utility>
#include <vector>

#include "merostat/exact/matrix.hpp"
#include "merostat/exact/roots.hpp"

namespace merostat::exact {

inline constexpr int kMaxExactDimension = 8;

struct SpectrumReport {
  Poly<GaussianRational> charpoly;
  std::vector<RootInfo> eigenvalues;  ///< with algebraic multiplicities
  bool all_integer = false;
  bool all_exact = false;

  /// Integer eigenvalues in increasing order (without multiplicity).
  std::vector<long> integer_eigenvalues() const;
  /// True when some eigenvalue is not an integer.
  bool has_non_integer() const { return !all_integer; }
};

/// Throws DimensionTooLarge for n > 8.
SpectrumReport integer_spectrum(const ExactMatrix& a);
SpectrumReport integer_spectrum(const RationalMatrix& a);

struct JordanBlock {
  GaussianRational eigenvalue;
  int size = 1;
};

struct JordanForm {
  ExactMatrix transform;  ///< T, with inverse(T) * a * T == jordan_matrix()
  std::vector<JordanBlock> blocks;

  /// Block-diagonal matrix with blocks lambda I + H, H the superdiagonal shift.
  ExactMatrix jordan_matrix() const;
};

/// Throws IrrationalSpectrum when an eigenvalue lies outside Q(i).
JordanForm jordan_decomposition(const ExactMatrix& a);

}  // namespace merostat::exact
