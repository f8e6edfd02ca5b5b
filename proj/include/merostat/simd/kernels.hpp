#pragma once

// Inner-loop kernels for the Nystrom solvers: complex axpy, dot products and
// the LU row update.  Complex arrays are interleaved (re, im) doubles, which is
// the layout std::complex<double> guarantees.  A scalar reference table is
// always available; AVX2 or NEON tables are selected at runtime.

#include <complex>
#include <cstddef>
#include <string_view>

namespace merostat::simd {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa);

struct KernelTable {
  Isa isa;
  /// y += a x
  void (*zaxpy)(std::size_t n, cplx a, const cplx* x, cplx* y);
  /// sum x_i y_i
  cplx (*zdotu)(std::size_t n, const cplx* x, const cplx* y);
  /// sum conj(x_i) y_i
  cplx (*zdotc)(std::size_t n, const cplx* x, const cplx* y);
  /// row -= f pivot_row
  void (*zrow_update)(std::size_t n, cplx f, const cplx* pivot_row, cplx* row);
  /// sum w_i x_i y_i with real weights
  cplx (*zwdotu)(std::size_t n, const double* w, const cplx* x, const cplx* y);
};

const KernelTable& scalar_kernels();
/// nullptr when the variant was not compiled into this build.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

/// Best variant the running CPU supports.  MEROSTAT_SIMD=scalar forces the
/// reference kernels.
Isa detect_isa();
const KernelTable& active_kernels();
/// Overrides the runtime choice (tests compare variants this way).  Throws
/// InvalidArgument when the requested variant is unavailable.
void force_isa(Isa isa);
void reset_isa();

}  // namespace merostat::simd
