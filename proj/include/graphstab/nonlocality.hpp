#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphstab/graph.hpp"
#include "graphstab/pauli.hpp"
#include "graphstab/statevector.hpp"

namespace graphstab {

enum class Axis : std::uint8_t { x, z };

char axis_name(Axis a);

/// One local measurement: a qubit and the spin direction measured on it.
struct Setting {
  QubitLabel qubit;
  Axis axis = Axis::z;

  friend bool operator==(const Setting&, const Setting&) = default;
};

/// prod_{t in terms} m_t = sign, over ±1 outcomes. At most one term per qubit.
struct CorrelationConstraint {
  std::vector<Setting> terms;
  int sign = +1;

  /// Throws Error on a repeated qubit or a sign other than ±1.
  void validate() const;

  /// "-m_z^{A3} m_x^{A4} m_x^{B2} = 1", the sign written on the left.
  std::string to_string() const;

  friend bool operator==(const CorrelationConstraint&,
                         const CorrelationConstraint&) = default;
};

/// Perfect correlation implied by a hermitian stabilizer element whose
/// factors are all X or Z. Throws Error for Y factors or imaginary signs.
CorrelationConstraint constraint_from_pauli(const PauliString& p,
                                            const Register& qubits);

struct QuantumPrediction {
  double expectation = 0.0;
  bool satisfied = false;
};

struct QuantumReport {
  std::vector<QuantumPrediction> predictions;
  bool all_satisfied = false;
};

/// Expectation of each origin Pauli on s by the dense simulator. A constraint
/// holds when the expectation is +1 within tol. Each origin must reproduce
/// its constraint under constraint_from_pauli.
QuantumReport quantum_check(const StateVector& s,
                            std::span<const CorrelationConstraint> constraints,
                            std::span<const PauliString> origins,
                            double tol = kAmplitudeTolerance);

inline constexpr std::size_t kMaxLhvSettings = 16;

/// Deterministic outcome table over a universe of settings.
struct LhvAssignment {
  std::vector<Setting> universe;
  std::vector<int> values;  // ±1, parallel to universe

  int value(const Setting& s) const;
};

/// Every qubit mentioned by any constraint, each with both axes, ordered by
/// (position, name, x before z).
std::vector<Setting> lhv_universe(std::span<const CorrelationConstraint> cs);

struct LhvResult {
  bool satisfiable = false;
  std::optional<LhvAssignment> witness;
  std::uint64_t assignments_scanned = 0;
};

/// Scans all 2^k assignments in canonical order: assignment number j gives
/// universe entry b the value -1 iff bit b of j is set. Returns the first
/// satisfying one. Throws Error when k exceeds 16.
LhvResult lhv_solve_exhaustive(std::span<const CorrelationConstraint> cs);

struct ContradictionCertificate {
  bool contradiction = false;
  /// Inclusion-minimal set of constraint indices whose monomials multiply to
  /// 1 while their signs multiply to -1 (ascending).
  std::vector<std::size_t> subset;
};

/// Parity argument over GF(2): every constraint is a linear equation on the
/// bits (m = -1). Agrees with lhv_solve_exhaustive on satisfiability.
ContradictionCertificate lhv_contradiction_certificate(
    std::span<const CorrelationConstraint> cs);

}  // namespace graphstab
