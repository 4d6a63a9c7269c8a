#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "graphstab/graph.hpp"
#include "graphstab/local_unitary.hpp"
#include "graphstab/mat2.hpp"
#include "graphstab/pauli.hpp"

namespace graphstab {

inline constexpr std::size_t kMaxStateQubits = 12;
inline constexpr double kAmplitudeTolerance = 1e-9;

/// Dense pure state over at most 12 qubits. The qubit at position 0 is the
/// most significant bit of the basis index, so |A3 A4 B1 B2> sits at
/// 8*a3 + 4*a4 + 2*b1 + b2.
class StateVector {
 public:
  /// Throws Error if sizes disagree or the norm differs from 1 by more than
  /// 1e-9.
  StateVector(Register qubits, std::vector<Complex> amplitudes);

  static StateVector basis(Register qubits, std::uint64_t index);
  static StateVector uniform(Register qubits);

  std::size_t size() const { return qubits_.size(); }
  std::size_t dimension() const { return amps_.size(); }
  const Register& qubits() const { return qubits_; }
  std::span<const Complex> amplitudes() const { return amps_; }
  Complex amplitude(std::uint64_t index) const { return amps_.at(index); }

  /// Index bit carrying the qubit at `position`.
  std::uint64_t bit_of(std::size_t position) const {
    return std::uint64_t{1} << (size() - 1 - position);
  }

  double norm() const;

 private:
  friend StateVector apply_controlled_phase(const StateVector&, std::string_view,
                                            std::string_view);
  friend StateVector apply_local(const LocalUnitary&, const StateVector&);
  friend StateVector apply_pauli(const PauliString&, const StateVector&);
  friend StateVector apply_single_qubit(const StateVector&, std::size_t,
                                        const Mat2&);
  friend StateVector build_graph_state(const Graph&);

  Register qubits_;
  std::vector<Complex> amps_;
};

/// The four-qubit state (|ζ0> + |ζ1>)/√2 on A3 A4 B1 B2.
StateVector build_chi00();

/// Product of controlled-phase gates over all edges applied to |+>^n.
StateVector build_graph_state(const Graph& g);

StateVector apply_controlled_phase(const StateVector& s, std::string_view a,
                                   std::string_view b);
StateVector apply_single_qubit(const StateVector& s, std::size_t position,
                               const Mat2& m);
StateVector apply_local(const LocalUnitary& u, const StateVector& s);
StateVector apply_pauli(const PauliString& p, const StateVector& s);

/// <s|t>
Complex inner_product(const StateVector& s, const StateVector& t);

/// <s|p|s>; p must be hermitian.
double expectation(const PauliString& p, const StateVector& s);

/// Largest componentwise |s_i - t_i|, global phase included.
double max_abs_difference(const StateVector& s, const StateVector& t);

/// Componentwise agreement including global phase.
bool approx_equal(const StateVector& s, const StateVector& t,
                  double tol = kAmplitudeTolerance);

/// |<s|t>| = 1 within tol.
bool equal_up_to_global_phase(const StateVector& s, const StateVector& t,
                              double tol = kAmplitudeTolerance);

}  // namespace graphstab
