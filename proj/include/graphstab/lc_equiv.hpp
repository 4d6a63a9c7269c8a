#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "graphstab/graph.hpp"
#include "graphstab/local_unitary.hpp"
#include "graphstab/statevector.hpp"

namespace graphstab {

/// Local unitary implementing local complementation at `a` on graph states:
/// exp(iπ/4 X) on a, exp(-iπ/4 Z) on each neighbour, global phase
/// exp(iπ/4 (deg(a) - 1)). With that phase
///   apply_local(U, |g>) == |local_complement(g, a)>
/// holds componentwise for every graph; for deg(a) == 2 the phase is exp(iπ/4).
LocalUnitary tau_unitary(const Graph& g, std::string_view a);

struct OrbitMember {
  Graph graph;
  /// Maps the seed's graph state exactly onto this member's graph state.
  LocalUnitary witness;
  /// Vertices complemented, in order, starting from the seed.
  std::vector<QubitLabel> path;
};

struct OrbitReport {
  Graph seed;
  std::vector<OrbitMember> members;
  bool truncated = false;
};

/// Breadth-first closure of `seed` under local complementation at every
/// vertex (vertex order), deduplicated by canonical_key. The seed is member 0
/// with the identity witness. Stops with truncated=true once `max_members`
/// graphs are collected and an unseen graph is still pending.
OrbitReport enumerate_orbit(const Graph& seed, std::size_t max_members = 4096);

/// Dense-oracle audit of an orbit: largest residual between
/// apply_local(witness, |seed>) and |member> over all members.
double orbit_witness_residual(const OrbitReport& report);

struct EquivalenceWitness {
  bool found = false;
  std::optional<LocalUnitary> unitary;
  /// Per-qubit index into CliffordGroup::instance() (present iff found).
  std::vector<std::size_t> clifford_indices;
  /// Rank of the witness in the lexicographic scan over 24^n assignments
  /// (qubit 0 is the most significant digit).
  std::uint64_t candidate_rank = 0;
  /// Search-tree nodes evaluated (partial and full assignments).
  std::uint64_t nodes_visited = 0;
};

inline constexpr std::size_t kMaxSearchQubits = 6;

/// First local-Clifford assignment, in canonical order, mapping source to
/// target up to global phase. Branches whose prefix reduced state already
/// disagrees with the target's are skipped; this never changes which
/// assignment is returned.
EquivalenceWitness lc_search(const StateVector& source,
                             const StateVector& target);

}  // namespace graphstab
