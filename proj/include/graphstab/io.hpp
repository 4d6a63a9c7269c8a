#pragma once

// JSON and DOT encodings of graphs, states, local unitaries and reports.
//
//   graph: {"vertices": ["A3", ...], "edges": [["A3", "A4"], ...]}
//   state: {"n": 4, "order": ["A3", ...], "amps": [[re, im], ...]}
//
// Decoders throw ParseError naming the line (for syntax errors) or the field.

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "graphstab/entanglement.hpp"
#include "graphstab/graph.hpp"
#include "graphstab/lc_equiv.hpp"
#include "graphstab/local_unitary.hpp"
#include "graphstab/nonlocality.hpp"
#include "graphstab/statevector.hpp"

namespace graphstab::io {

using Json = nlohmann::ordered_json;

/// Parses text; syntax errors become ParseError prefixed with `source`.
Json parse_json(std::string_view text, std::string_view source);
Json read_json_file(const std::filesystem::path& path);

Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);

/// `graph { A3 -- A4; ... }`; isolated vertices are listed as bare nodes.
std::string graph_to_dot(const Graph& g, std::string_view comment = {});

StateVector state_from_json(const Json& j);
Json state_to_json(const StateVector& s);

Json complex_to_json(Complex c);

/// {"global_phase": [re, im], "factors": [{"qubit": name, "matrix":
/// [[[re, im], [re, im]], [[re, im], [re, im]]]}, ...]}
Json local_unitary_to_json(const LocalUnitary& u, const Register& qubits);

Json orbit_to_json(const OrbitReport& report);
std::string orbit_to_dot(const OrbitReport& report);

Json witness_to_json(const EquivalenceWitness& w, const Register& qubits);

Json constraint_to_json(const CorrelationConstraint& c);

/// {"cut": {"a": [...], "b": [...]}, "eigenvalues": [...], "entropy": h}
Json entropy_report(const StateVector& s, const Bipartition& cut);

}  // namespace graphstab::io
