#pragma once

// Shearing reduction of the residue spectrum.  With S = diag(I_{n-q}, t I_q)
// the gauge B = S^{-1} A S - S^{-1} S' lowers the eigenvalues carried by the
// last q coordinates by one, provided the last q rows of a_{-1} vanish to the
// left of the trailing q x q block.

#include "merostat/singular/laurent.hpp"

namespace merostat::singular {

/// q = 1 lowers one copy of the trailing eigenvalue (the default);
/// q = size of the trailing Jordan block shifts the whole block.
/// Throws NotJordanAdapted when the residue does not have the required shape.
LaurentMatrix shearing_step(const LaurentMatrix& a, int q = 1);

struct ReductionTrace {
  LaurentMatrix result;
  int shears = 0;
  std::vector<std::vector<long>> integer_spectra;  ///< integer eigenvalues after each step
};

/// Constant conjugations plus shears until every integer eigenvalue of the
/// residue equals the smallest one.  Non-integer eigenvalues are untouched.
ReductionTrace reduce_to_min_spectrum_traced(const LaurentMatrix& a);
LaurentMatrix reduce_to_min_spectrum(const LaurentMatrix& a);

}  // namespace merostat::singular
