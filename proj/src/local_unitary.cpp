#include "graphstab/local_unitary.hpp"

#include <cmath>

#include "graphstab/error.hpp"

namespace graphstab {

LocalUnitary::LocalUnitary(Complex global_phase, std::vector<Mat2> factors)
    : phase_(global_phase), factors_(std::move(factors)) {
  if (std::abs(std::abs(phase_) - 1.0) > 1e-9)
    throw Error("local unitary global phase is not unit-modulus");
  for (std::size_t q = 0; q < factors_.size(); ++q)
    if (!mat2::is_unitary(factors_[q]))
      throw Error("local unitary factor on qubit " + std::to_string(q) +
                  " is not unitary");
}

LocalUnitary LocalUnitary::identity(std::size_t n) {
  return LocalUnitary(1.0, std::vector<Mat2>(n, mat2::identity()));
}

LocalUnitary LocalUnitary::then_on(std::size_t q, const Mat2& m) const {
  LocalUnitary out = *this;
  out.factors_.at(q) = mat2::multiply(m, out.factors_[q]);
  return out;
}

LocalUnitary LocalUnitary::with_phase(Complex extra) const {
  LocalUnitary out = *this;
  out.phase_ *= extra;
  return out;
}

LocalUnitary LocalUnitary::adjoint() const {
  LocalUnitary out = *this;
  out.phase_ = std::conj(phase_);
  for (auto& f : out.factors_) f = mat2::adjoint(f);
  return out;
}

LocalUnitary compose(const LocalUnitary& after, const LocalUnitary& before) {
  if (after.size() != before.size())
    throw Error("cannot compose local unitaries on " +
                std::to_string(after.size()) + " and " +
                std::to_string(before.size()) + " qubits");
  std::vector<Mat2> factors(after.size());
  for (std::size_t q = 0; q < factors.size(); ++q)
    factors[q] = mat2::multiply(after.factor(q), before.factor(q));
  return LocalUnitary(after.global_phase() * before.global_phase(),
                      std::move(factors));
}

}  // namespace graphstab
