#pragma once

#include <cstddef>
#include <vector>

#include "graphstab/mat2.hpp"

namespace graphstab {

/// global_phase * (factors[0] ⊗ factors[1] ⊗ ...), factor q acting on the
/// qubit at position q.
class LocalUnitary {
 public:
  LocalUnitary() = default;

  /// Throws Error if the phase is not unit-modulus or a factor is not unitary
  /// (tolerance 1e-9).
  LocalUnitary(Complex global_phase, std::vector<Mat2> factors);

  static LocalUnitary identity(std::size_t n);

  std::size_t size() const { return factors_.size(); }
  Complex global_phase() const { return phase_; }
  const std::vector<Mat2>& factors() const { return factors_; }
  const Mat2& factor(std::size_t q) const { return factors_.at(q); }

  /// Left-multiplies `m` onto qubit q: factor_q <- m * factor_q.
  LocalUnitary then_on(std::size_t q, const Mat2& m) const;
  LocalUnitary with_phase(Complex extra) const;

  LocalUnitary adjoint() const;

 private:
  Complex phase_{1.0, 0.0};
  std::vector<Mat2> factors_;
};

/// The operator `after * before` (before acts first).
LocalUnitary compose(const LocalUnitary& after, const LocalUnitary& before);

}  // namespace graphstab
