#include "graphstab/simd/kernels.hpp"

#include <bit>

namespace graphstab::simd {
namespace {

void apply_single_qubit(std::span<Amplitude> amps, std::size_t stride,
                        const Amplitude* m) {
  const std::size_t dim = amps.size();
  for (std::size_t block = 0; block < dim; block += 2 * stride) {
    for (std::size_t j = block; j < block + stride; ++j) {
      const Amplitude a0 = amps[j];
      const Amplitude a1 = amps[j + stride];
      amps[j] = m[0] * a0 + m[1] * a1;
      amps[j + stride] = m[2] * a0 + m[3] * a1;
    }
  }
}

void negate_masked(std::span<Amplitude> amps, std::uint64_t mask) {
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & mask) == mask) amps[i] = -amps[i];
  }
}

void apply_pauli(std::span<const Amplitude> in, std::span<Amplitude> out,
                 std::uint64_t flip, std::uint64_t sign_mask, Amplitude coeff) {
  for (std::size_t i = 0; i < in.size(); ++i) {
    const bool odd = std::popcount(i & sign_mask) & 1;
    out[i ^ flip] = odd ? -(coeff * in[i]) : coeff * in[i];
  }
}

Amplitude inner_product(std::span<const Amplitude> a,
                        std::span<const Amplitude> b) {
  Amplitude acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

void scale(std::span<Amplitude> amps, Amplitude factor) {
  for (auto& a : amps) a *= factor;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", apply_single_qubit, negate_masked,
                                 apply_pauli, inner_product, scale};
  return table;
}

}  // namespace graphstab::simd
