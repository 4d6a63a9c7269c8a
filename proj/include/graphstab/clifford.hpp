#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphstab/local_unitary.hpp"
#include "graphstab/mat2.hpp"
#include "graphstab/pauli.hpp"

namespace graphstab {

struct SingleQubitClifford {
  std::size_t index = 0;
  /// Generator word, rightmost letter applied first ("" is the identity).
  std::string word;
  /// Canonical representative: first non-negligible entry real positive.
  Mat2 matrix;
  /// C X C^dagger and C Z C^dagger as one-qubit signed Paulis.
  PauliString x_image;
  PauliString z_image;
};

/// The 24 single-qubit Cliffords modulo global phase, generated by closing
/// {H, S} under left multiplication in breadth-first order. Index 0 is the
/// identity. The instance is built once and immutable afterwards.
class CliffordGroup {
 public:
  static const CliffordGroup& instance();

  std::span<const SingleQubitClifford> elements() const { return elements_; }
  const SingleQubitClifford& at(std::size_t i) const { return elements_.at(i); }
  std::size_t size() const { return elements_.size(); }

  /// Index of the element equal to m up to global phase (tolerance 1e-9).
  std::optional<std::size_t> identify(const Mat2& m) const;

  /// Index of the inverse element.
  std::size_t inverse(std::size_t i) const { return inverses_.at(i); }

  /// C P C^dagger for a one-qubit Pauli P (any phase).
  PauliString conjugate(std::size_t i, const PauliString& single) const;

 private:
  CliffordGroup();
  std::vector<SingleQubitClifford> elements_;
  std::vector<std::size_t> inverses_;
};

/// Identifies a one-qubit hermitian matrix as ±X, ±Y or ±Z; nullopt otherwise.
std::optional<PauliString> match_signed_pauli(const Mat2& m, double tol = 1e-9);

/// U p U^dagger computed symbolically from the per-qubit Clifford tables.
/// Throws Error naming the first qubit whose factor is not Clifford.
PauliString conjugate_by_local(const LocalUnitary& u, const PauliString& p);

/// Clifford index of every factor of u; throws like conjugate_by_local.
std::vector<std::size_t> clifford_indices(const LocalUnitary& u);

}  // namespace graphstab
