#pragma once

#include <vector>

#include "graphstab/graph.hpp"
#include "graphstab/local_unitary.hpp"
#include "graphstab/pauli.hpp"
#include "graphstab/statevector.hpp"

namespace graphstab {

/// Hermitian, pairwise commuting, GF(2)-independent generators with real
/// signs. The constructor enforces all three.
class StabilizerSet {
 public:
  explicit StabilizerSet(std::vector<PauliString> generators);

  const std::vector<PauliString>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  std::size_t qubit_count() const;

  friend bool operator==(const StabilizerSet&, const StabilizerSet&) = default;

 private:
  std::vector<PauliString> generators_;
};

/// K_a = X_a prod_{b in N(a)} Z_b for every vertex, in vertex order.
StabilizerSet graph_generators(const Graph& g);

/// Checked with the dense simulator: every generator fixes s componentwise.
bool stabilizes(const StabilizerSet& set, const StateVector& s,
                double tol = kAmplitudeTolerance);

/// Largest componentwise residual |k s - s| over all generators.
double stabilizer_residual(const StabilizerSet& set, const StateVector& s);

StabilizerSet conjugate_set(const LocalUnitary& u, const StabilizerSet& set);

/// One signed Pauli text line per generator.
std::string to_string(const StabilizerSet& set);

}  // namespace graphstab
