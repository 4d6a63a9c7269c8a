#pragma once

#include <span>
#include <string>
#include <vector>

#include "graphstab/graph.hpp"
#include "graphstab/mat2.hpp"
#include "graphstab/statevector.hpp"

namespace graphstab {

/// Split of a register into a kept side and its complement. Both sides are
/// listed in register order.
class Bipartition {
 public:
  /// Throws Error for unknown or repeated labels, or if side_a is empty or
  /// covers every qubit.
  Bipartition(const Register& qubits, std::span<const std::string> side_a);

  const std::vector<QubitLabel>& side_a() const { return side_a_; }
  const std::vector<QubitLabel>& side_b() const { return side_b_; }
  Bipartition complement() const;

  /// Every nontrivial cut of the register taken once, side_a holding
  /// position 0 (2^(n-1) - 1 cuts).
  static std::vector<Bipartition> all_cuts(const Register& qubits);

 private:
  Bipartition() = default;
  Register qubits_;
  std::vector<QubitLabel> side_a_;
  std::vector<QubitLabel> side_b_;
};

/// Row-major density matrix. Construction validates hermiticity, unit trace
/// and positive semidefiniteness within 1e-9.
class DensityMatrix {
 public:
  DensityMatrix(std::size_t dim, std::vector<Complex> entries);

  std::size_t dim() const { return dim_; }
  Complex at(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  const std::vector<Complex>& entries() const { return entries_; }

  /// Ascending.
  const std::vector<double>& eigenvalues() const { return eigenvalues_; }

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
  std::vector<double> eigenvalues_;
};

/// Partial trace of |s><s| over side_b.
DensityMatrix reduce(const StateVector& s, const Bipartition& cut);

/// Von Neumann entropy in bits; eigenvalues at or below 1e-12 are dropped.
double entropy(const DensityMatrix& rho);

/// tr(rho^2)
double purity(const DensityMatrix& rho);

bool is_product_across(const StateVector& s, const Bipartition& cut);

}  // namespace graphstab
