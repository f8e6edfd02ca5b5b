#include <arm_neon.h>

#include "merostat/simd/kernels.hpp"

namespace merostat::simd {

namespace {

// One complex number per register: [re, im].
inline float64x2_t load1(const cplx* p) { return vld1q_f64(reinterpret_cast<const double*>(p)); }
inline void store1(cplx* p, float64x2_t v) { vst1q_f64(reinterpret_cast<double*>(p), v); }

// [re, im] -> [-im, re]
inline float64x2_t mul_i(float64x2_t v) {
  const float64x2_t sw = vextq_f64(v, v, 1);
  return vmulq_f64(sw, float64x2_t{-1.0, 1.0});
}

void zaxpy_neon(std::size_t n, cplx a, const cplx* x, cplx* y) {
  const float64x2_t ar = vdupq_n_f64(a.real());
  const float64x2_t ai = vdupq_n_f64(a.imag());
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t vx = load1(x + i);
    float64x2_t vy = vfmaq_f64(load1(y + i), ar, vx);
    vy = vfmaq_f64(vy, ai, mul_i(vx));
    store1(y + i, vy);
  }
}

void zrow_update_neon(std::size_t n, cplx f, const cplx* pivot_row, cplx* row) {
  const float64x2_t fr = vdupq_n_f64(f.real());
  const float64x2_t fi = vdupq_n_f64(f.imag());
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t vp = load1(pivot_row + i);
    float64x2_t vr = vfmsq_f64(load1(row + i), fr, vp);
    vr = vfmsq_f64(vr, fi, mul_i(vp));
    store1(row + i, vr);
  }
}

cplx zdotu_neon(std::size_t n, const cplx* x, const cplx* y) {
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t vx = load1(x + i);
    acc = vfmaq_f64(acc, vx, vdupq_n_f64(y[i].real()));
    acc = vfmaq_f64(acc, mul_i(vx), vdupq_n_f64(y[i].imag()));
  }
  return {vgetq_lane_f64(acc, 0), vgetq_lane_f64(acc, 1)};
}

cplx zdotc_neon(std::size_t n, const cplx* x, const cplx* y) {
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t vy = load1(y + i);
    acc = vfmaq_f64(acc, vy, vdupq_n_f64(x[i].real()));
    acc = vfmsq_f64(acc, mul_i(vy), vdupq_n_f64(x[i].imag()));
  }
  return {vgetq_lane_f64(acc, 0), vgetq_lane_f64(acc, 1)};
}

cplx zwdotu_neon(std::size_t n, const double* w, const cplx* x, const cplx* y) {
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t vx = vmulq_n_f64(load1(x + i), w[i]);
    acc = vfmaq_f64(acc, vx, vdupq_n_f64(y[i].real()));
    acc = vfmaq_f64(acc, mul_i(vx), vdupq_n_f64(y[i].imag()));
  }
  return {vgetq_lane_f64(acc, 0), vgetq_lane_f64(acc, 1)};
}

}  // namespace

const KernelTable* neon_kernels() {
  static const KernelTable table{Isa::Neon, zaxpy_neon, zdotu_neon, zdotc_neon, zrow_update_neon, zwdotu_neon};
  return &table;
}

const KernelTable* avx2_kernels() { return nullptr; }

}  // namespace merostat::simd
