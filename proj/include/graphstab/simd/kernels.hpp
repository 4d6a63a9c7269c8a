#pragma once

// Amplitude kernels behind the dense simulator. Each kernel has a scalar
// reference and, where the target supports it, an AVX2 variant. The variants
// must agree with the reference to within floating-point reassociation.

#include <complex>
#include <cstdint>
#include <span>

namespace graphstab::simd {

using Amplitude = std::complex<double>;

struct KernelTable {
  const char* name;

  // 2x2 row-major matrix m applied to the qubit whose index bit is `stride`
  // (a power of two).
  void (*apply_single_qubit)(std::span<Amplitude> amps, std::size_t stride,
                             const Amplitude* m);

  // amps[i] = -amps[i] wherever (i & mask) == mask.
  void (*negate_masked)(std::span<Amplitude> amps, std::uint64_t mask);

  // out[i ^ flip] = coeff * (-1)^popcount(i & sign_mask) * in[i].
  // `in` and `out` must not alias.
  void (*apply_pauli)(std::span<const Amplitude> in, std::span<Amplitude> out,
                      std::uint64_t flip, std::uint64_t sign_mask,
                      Amplitude coeff);

  // sum_i conj(a[i]) * b[i]
  Amplitude (*inner_product)(std::span<const Amplitude> a,
                             std::span<const Amplitude> b);

  void (*scale)(std::span<Amplitude> amps, Amplitude factor);
};

const KernelTable& scalar_kernels();

/// nullptr when the library was built without AVX2 support or the running
/// CPU lacks AVX2/FMA.
const KernelTable* avx2_kernels();

/// Table used by the simulator. Defaults to the widest supported variant;
/// the environment variable GRAPHSTAB_KERNELS=scalar|avx2 overrides.
const KernelTable& active_kernels();

bool cpu_supports_avx2();

}  // namespace graphstab::simd
