#include <cstdlib>
#include <string_view>

#include "graphstab/simd/kernels.hpp"

namespace graphstab::simd {

#if defined(GRAPHSTAB_WITH_AVX2)
const KernelTable& avx2_kernel_table();
#endif

bool cpu_supports_avx2() {
#if defined(GRAPHSTAB_WITH_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* avx2_kernels() {
#if defined(GRAPHSTAB_WITH_AVX2)
  static const bool usable = cpu_supports_avx2();
  return usable ? &avx2_kernel_table() : nullptr;
#else
  return nullptr;
#endif
}

namespace {

const KernelTable& select_kernels() {
  const char* env = std::getenv("GRAPHSTAB_KERNELS");
  const std::string_view requested = env ? env : "";
  if (requested == "scalar") return scalar_kernels();
  if (const KernelTable* wide = avx2_kernels()) return *wide;
  return scalar_kernels();
}

}  // namespace

const KernelTable& active_kernels() {
  static const KernelTable& table = select_kernels();
  return table;
}

}  // namespace graphstab::simd
