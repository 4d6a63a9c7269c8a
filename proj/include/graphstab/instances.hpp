#pragma once

// The concrete four-qubit objects the toolkit was built to check: the two
// graphs related by one local complementation at A4, the state χ00 written
// out in the computational basis, the stated local unitaries, and the
// stabilizer generators and correlations exactly as tabulated. These are
// literal reference values; nothing here is derived by the library.

#include <vector>

#include "graphstab/graph.hpp"
#include "graphstab/local_unitary.hpp"
#include "graphstab/nonlocality.hpp"
#include "graphstab/pauli.hpp"

namespace graphstab::instances {

/// A3 A4 B1 B2, in ket order.
Register four_qubits();

/// Square A3-A4-B2-B1-A3.
Graph graph_a();

/// Edges A3A4, A3B1, A3B2, A4B2, B1B2.
Graph graph_b();

/// exp(iπ/4) exp(-iπ/4 Z_A3) exp(iπ/4 X_A4) exp(-iπ/4 Z_B2).
LocalUnitary graph_a_to_graph_b();

/// Z_A3 Z_B2 H_B2 (H applied first).
LocalUnitary graph_b_to_chi00();

/// K1..K4 for graph_b: +XZZZ, +ZXIZ, +ZIXZ, +ZZZX.
std::vector<PauliString> graph_b_generators();

/// The same generators conjugated into χ00's stabilizer:
/// +XZZX, -ZXIX, -ZIXX, +ZZZZ.
std::vector<PauliString> chi00_generators();

/// Origins of the four correlations: K̄1, K̄2, K̄4 and K̄1K̄2K̄4 = +XXIZ.
std::vector<PauliString> ghz_origins();

/// The four correlations, written out term by term.
std::vector<CorrelationConstraint> ghz_constraints();

}  // namespace graphstab::instances
