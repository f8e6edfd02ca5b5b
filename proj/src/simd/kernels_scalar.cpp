#include "merostat/simd/kernels.hpp"

namespace merostat::simd {

namespace {

void zaxpy_scalar(std::size_t n, cplx a, const cplx* x, cplx* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

cplx zdotu_scalar(std::size_t n, const cplx* x, const cplx* y) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
  }
  return {re, im};
}

cplx zdotc_scalar(std::size_t n, const cplx* x, const cplx* y) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

void zrow_update_scalar(std::size_t n, cplx f, const cplx* pivot_row, cplx* row) {
  for (std::size_t i = 0; i < n; ++i) row[i] -= f * pivot_row[i];
}

cplx zwdotu_scalar(std::size_t n, const double* w, const cplx* x, const cplx* y) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += w[i] * (x[i].real() * y[i].real() - x[i].imag() * y[i].imag());
    im += w[i] * (x[i].real() * y[i].imag() + x[i].imag() * y[i].real());
  }
  return {re, im};
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{Isa::Scalar, zaxpy_scalar, zdotu_scalar, zdotc_scalar, zrow_update_scalar,
                                 zwdotu_scalar};
  return table;
}

}  // namespace merostat::simd
