// Compiled with -mavx2 -mfma. Only reached through avx2_kernels(), which
// checks the running CPU first.

#include <immintrin.h>

#include <bit>

#include "graphstab/simd/kernels.hpp"

namespace graphstab::simd {
namespace {

// One __m256d holds two interleaved complex doubles: [re0 im0 re1 im1].

inline const double* as_doubles(const Amplitude* p) {
  return reinterpret_cast<const double*>(p);
}
inline double* as_doubles(Amplitude* p) { return reinterpret_cast<double*>(p); }

inline __m256d swap_re_im(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

// v * c for a broadcast complex scalar c = (cr, ci).
inline __m256d cmul(__m256d v, __m256d cr, __m256d ci) {
  return _mm256_fmaddsub_pd(v, cr, _mm256_mul_pd(swap_re_im(v), ci));
}

struct Broadcast {
  __m256d re;
  __m256d im;
  explicit Broadcast(Amplitude c)
      : re(_mm256_set1_pd(c.real())), im(_mm256_set1_pd(c.imag())) {}
};

// Sign patterns for two complex lanes, indexed by (neg1 << 1) | neg0.
inline __m256d lane_signs(bool neg0, bool neg1) {
  const double s0 = neg0 ? -0.0 : 0.0;
  const double s1 = neg1 ? -0.0 : 0.0;
  return _mm256_set_pd(s1, s1, s0, s0);
}

void apply_single_qubit(std::span<Amplitude> amps, std::size_t stride,
                        const Amplitude* m) {
  if (stride < 2) {
    // Pair partners share one register; the reference loop is as fast.
    scalar_kernels().apply_single_qubit(amps, stride, m);
    return;
  }
  const Broadcast m00(m[0]), m01(m[1]), m10(m[2]), m11(m[3]);
  const std::size_t dim = amps.size();
  Amplitude* base = amps.data();
  for (std::size_t block = 0; block < dim; block += 2 * stride) {
    for (std::size_t j = block; j < block + stride; j += 2) {
      double* p0 = as_doubles(base + j);
      double* p1 = as_doubles(base + j + stride);
      const __m256d a0 = _mm256_loadu_pd(p0);
      const __m256d a1 = _mm256_loadu_pd(p1);
      const __m256d r0 = _mm256_add_pd(cmul(a0, m00.re, m00.im),
                                       cmul(a1, m01.re, m01.im));
      const __m256d r1 = _mm256_add_pd(cmul(a0, m10.re, m10.im),
                                       cmul(a1, m11.re, m11.im));
      _mm256_storeu_pd(p0, r0);
      _mm256_storeu_pd(p1, r1);
    }
  }
}

void negate_masked(std::span<Amplitude> amps, std::uint64_t mask) {
  const std::size_t dim = amps.size();
  if (dim < 2) {
    scalar_kernels().negate_masked(amps, mask);
    return;
  }
  for (std::size_t i = 0; i < dim; i += 2) {
    const bool n0 = (i & mask) == mask;
    const bool n1 = ((i + 1) & mask) == mask;
    if (!n0 && !n1) continue;
    double* p = as_doubles(amps.data() + i);
    _mm256_storeu_pd(p, _mm256_xor_pd(_mm256_loadu_pd(p), lane_signs(n0, n1)));
  }
}

void apply_pauli(std::span<const Amplitude> in, std::span<Amplitude> out,
                 std::uint64_t flip, std::uint64_t sign_mask, Amplitude coeff) {
  const std::size_t dim = in.size();
  if (dim < 2) {
    scalar_kernels().apply_pauli(in, out, flip, sign_mask, coeff);
    return;
  }
  const Broadcast c(coeff);
  const bool swap_lanes = flip & 1;
  for (std::size_t i = 0; i < dim; i += 2) {
    const bool n0 = std::popcount(i & sign_mask) & 1;
    const bool n1 = std::popcount((i + 1) & sign_mask) & 1;
    __m256d v = _mm256_loadu_pd(as_doubles(in.data() + i));
    v = _mm256_xor_pd(cmul(v, c.re, c.im), lane_signs(n0, n1));
    if (swap_lanes) {
      // i even and flip odd: (i+1)^flip == (i^flip) - 1, so the pair lands
      // contiguously in reversed order.
      v = _mm256_permute2f128_pd(v, v, 0x01);
      _mm256_storeu_pd(as_doubles(out.data() + ((i + 1) ^ flip)), v);
    } else {
      _mm256_storeu_pd(as_doubles(out.data() + (i ^ flip)), v);
    }
  }
}

Amplitude inner_product(std::span<const Amplitude> a,
                        std::span<const Amplitude> b) {
  const std::size_t dim = a.size();
  __m256d direct = _mm256_setzero_pd();   // (ar*br, ai*bi) pairs
  __m256d crossed = _mm256_setzero_pd();  // (ar*bi, ai*br) pairs
  std::size_t i = 0;
  for (; i + 2 <= dim; i += 2) {
    const __m256d va = _mm256_loadu_pd(as_doubles(a.data() + i));
    const __m256d vb = _mm256_loadu_pd(as_doubles(b.data() + i));
    direct = _mm256_fmadd_pd(va, vb, direct);
    crossed = _mm256_fmadd_pd(va, swap_re_im(vb), crossed);
  }
  alignas(32) double d[4];
  alignas(32) double x[4];
  _mm256_store_pd(d, direct);
  _mm256_store_pd(x, crossed);
  Amplitude acc{d[0] + d[1] + d[2] + d[3], x[0] - x[1] + x[2] - x[3]};
  for (; i < dim; ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

void scale(std::span<Amplitude> amps, Amplitude factor) {
  const Broadcast c(factor);
  const std::size_t dim = amps.size();
  std::size_t i = 0;
  for (; i + 2 <= dim; i += 2) {
    double* p = as_doubles(amps.data() + i);
    _mm256_storeu_pd(p, cmul(_mm256_loadu_pd(p), c.re, c.im));
  }
  for (; i < dim; ++i) amps[i] *= factor;
}

}  // namespace

const KernelTable& avx2_kernel_table() {
  static const KernelTable table{"avx2", apply_single_qubit, negate_masked,
                                 apply_pauli, inner_product, scale};
  return table;
}

}  // namespace graphstab::simd
