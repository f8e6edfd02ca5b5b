#include <atomic>
#include <cstdlib>
#include <string>

#include "merostat/error.hpp"
#include "merostat/simd/kernels.hpp"

namespace merostat::simd {

#if !defined(MEROSTAT_HAVE_AVX2) && !defined(MEROSTAT_HAVE_NEON)
const KernelTable* avx2_kernels() { return nullptr; }
const KernelTable* neon_kernels() { return nullptr; }
#endif

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "scalar";
}

namespace {

const KernelTable* table_for(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return &scalar_kernels();
    case Isa::Avx2: return avx2_kernels();
    case Isa::Neon: return neon_kernels();
  }
  return nullptr;
}

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(MEROSTAT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(MEROSTAT_HAVE_NEON)
      return true;  // Advanced SIMD is mandatory on AArch64.
#else
      return false;
#endif
  }
  return false;
}

std::atomic<const KernelTable*> forced{nullptr};

}  // namespace

Isa detect_isa() {
  if (const char* env = std::getenv("MEROSTAT_SIMD"); env && std::string(env) == "scalar") return Isa::Scalar;
  if (avx2_kernels() && cpu_supports(Isa::Avx2)) return Isa::Avx2;
  if (neon_kernels() && cpu_supports(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

const KernelTable& active_kernels() {
  if (const KernelTable* f = forced.load(std::memory_order_acquire)) return *f;
  static const KernelTable* chosen = table_for(detect_isa());
  return *chosen;
}

void force_isa(Isa isa) {
  const KernelTable* t = table_for(isa);
  if (!t || !cpu_supports(isa))
    throw Error(ErrorCode::InvalidArgument, "SIMD variant " + std::string(to_string(isa)) + " is not available");
  forced.store(t, std::memory_order_release);
}

void reset_isa() { forced.store(nullptr, std::memory_order_release); }

}  // namespace merostat::simd
