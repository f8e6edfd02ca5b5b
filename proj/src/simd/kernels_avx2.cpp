// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include "merostat/simd/kernels.hpp"

namespace merostat::simd {

namespace {

// Two complex numbers per register: [re0, im0, re1, im1].
inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

// a * x for a broadcast complex a: addsub(ar x, ai swap(x)).
inline __m256d cmul_broadcast(__m256d ar, __m256d ai, __m256d x) {
  const __m256d xs = _mm256_permute_pd(x, 0b0101);
  return _mm256_addsub_pd(_mm256_mul_pd(ar, x), _mm256_mul_pd(ai, xs));
}

inline cplx hsum2(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return {_mm_cvtsd_f64(s), _mm_cvtsd_f64(_mm_unpackhi_pd(s, s))};
}

void zaxpy_avx2(std::size_t n, cplx a, const cplx* x, cplx* y) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) store2(y + i, _mm256_add_pd(load2(y + i), cmul_broadcast(ar, ai, load2(x + i))));
  for (; i < n; ++i) y[i] += a * x[i];
}

void zrow_update_avx2(std::size_t n, cplx f, const cplx* pivot_row, cplx* row) {
  const __m256d fr = _mm256_set1_pd(f.real());
  const __m256d fi = _mm256_set1_pd(f.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    store2(row + i, _mm256_sub_pd(load2(row + i), cmul_broadcast(fr, fi, load2(pivot_row + i))));
  for (; i < n; ++i) row[i] -= f * pivot_row[i];
}

// Accumulates x * re(y) and swap(x) * im(y) separately; the complex product
// is recovered from the two sums at the end.
void dot_accumulate(std::size_t n, const cplx* x, const cplx* y, __m256d& acc_r, __m256d& acc_i, std::size_t& i) {
  acc_r = _mm256_setzero_pd();
  acc_i = _mm256_setzero_pd();
  for (i = 0; i + 2 <= n; i += 2) {
    const __m256d vx = load2(x + i);
    const __m256d vy = load2(y + i);
    const __m256d yr = _mm256_movedup_pd(vy);
    const __m256d yi = _mm256_permute_pd(vy, 0b1111);
    acc_r = _mm256_fmadd_pd(vx, yr, acc_r);
    acc_i = _mm256_fmadd_pd(_mm256_permute_pd(vx, 0b0101), yi, acc_i);
  }
}

cplx zdotu_avx2(std::size_t n, const cplx* x, const cplx* y) {
  __m256d acc_r, acc_i;
  std::size_t i;
  dot_accumulate(n, x, y, acc_r, acc_i, i);
  // acc_r = [xr yr, xi yr], acc_i = [xi yi, xr yi].
  cplx s = hsum2(_mm256_addsub_pd(acc_r, acc_i));
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

cplx zdotc_avx2(std::size_t n, const cplx* x, const cplx* y) {
  __m256d acc_r, acc_i;
  std::size_t i;
  dot_accumulate(n, x, y, acc_r, acc_i, i);
  const cplx r = hsum2(acc_r), q = hsum2(acc_i);
  cplx s{r.real() + q.real(), q.imag() - r.imag()};
  for (; i < n; ++i) s += std::conj(x[i]) * y[i];
  return s;
}

cplx zwdotu_avx2(std::size_t n, const double* w, const cplx* x, const cplx* y) {
  __m256d acc_r = _mm256_setzero_pd();
  __m256d acc_i = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    // [w0, w0, w1, w1]
    const __m256d vw = _mm256_set_pd(w[i + 1], w[i + 1], w[i], w[i]);
    const __m256d vx = _mm256_mul_pd(vw, load2(x + i));
    const __m256d vy = load2(y + i);
    acc_r = _mm256_fmadd_pd(vx, _mm256_movedup_pd(vy), acc_r);
    acc_i = _mm256_fmadd_pd(_mm256_permute_pd(vx, 0b0101), _mm256_permute_pd(vy, 0b1111), acc_i);
  }
  cplx s = hsum2(_mm256_addsub_pd(acc_r, acc_i));
  for (; i < n; ++i) s += w[i] * x[i] * y[i];
  return s;
}

}  // namespace

const KernelTable* avx2_kernels() {
  static const KernelTable table{Isa::Avx2, zaxpy_avx2, zdotu_avx2, zdotc_avx2, zrow_update_avx2, zwdotu_avx2};
  return &table;
}

const KernelTable* neon_kernels() { return nullptr; }

}  // namespace merostat::simd
