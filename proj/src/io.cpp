#include "graphstab/io.hpp"

#include <fstream>
#include <sstream>

#include "graphstab/clifford.hpp"
#include "graphstab/error.hpp"

namespace graphstab::io {
namespace {

[[noreturn]] void field_error(std::string_view what, std::string_view field,
                              std::string_view detail) {
  throw ParseError(std::string(what) + ": field '" + std::string(field) +
                   "': " + std::string(detail));
}

const Json& require(const Json& j, std::string_view what, const char* key) {
  if (!j.is_object()) throw ParseError(std::string(what) + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) field_error(what, key, "missing");
  return *it;
}

std::vector<std::string> string_list(const Json& j, std::string_view what,
                                     const char* key) {
  const Json& arr = require(j, what, key);
  if (!arr.is_array()) field_error(what, key, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_string())
      field_error(what, std::string(key) + "[" + std::to_string(i) + "]",
                  "expected a string");
    out.push_back(arr[i].get<std::string>());
  }
  return out;
}

Register register_from(std::vector<std::string> names, std::string_view what,
                       const char* key) {
  try {
    return Register(std::move(names));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    field_error(what, key, e.what());
  }
}

Json matrix_to_json(const Mat2& m) {
  return Json::array({Json::array({complex_to_json(m[0]), complex_to_json(m[1])}),
                      Json::array({complex_to_json(m[2]), complex_to_json(m[3])})});
}

Json labels_to_json(const std::vector<QubitLabel>& labels) {
  Json out = Json::array();
  for (const auto& l : labels) out.push_back(l.name);
  return out;
}

}  // namespace

Json parse_json(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string(source) + ": " + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path.string());
}

Graph graph_from_json(const Json& j) {
  constexpr std::string_view what = "graph JSON";
  Register vertices = register_from(string_list(j, what, "vertices"), what, "vertices");
  if (vertices.size() == 0) field_error(what, "vertices", "must be nonempty");
  if (vertices.size() > kMaxGraphVertices)
    field_error(what, "vertices", "at most 32 vertices are supported");
  const Json& edges = require(j, what, "edges");
  if (!edges.is_array()) field_error(what, "edges", "expected an array of pairs");

  Graph g(vertices);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string field = "edges[" + std::to_string(i) + "]";
    const Json& e = edges[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      field_error(what, field, "expected a pair of vertex names");
    const auto a = e[0].get<std::string>();
    const auto b = e[1].get<std::string>();
    if (!vertices.contains(a)) field_error(what, field, "unknown vertex '" + a + "'");
    if (!vertices.contains(b)) field_error(what, field, "unknown vertex '" + b + "'");
    const auto pa = static_cast<std::size_t>(vertices.position_of(a));
    const auto pb = static_cast<std::size_t>(vertices.position_of(b));
    if (pa == pb) field_error(what, field, "self-loop on '" + a + "'");
    if (g.has_edge(pa, pb))
      field_error(what, field, "duplicate edge {" + a + ", " + b + "}");
    g.add_edge(pa, pb);
  }
  return g;
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges())
    edges.push_back({g.vertices().names()[a], g.vertices().names()[b]});
  return Json{{"vertices", g.vertices().names()}, {"edges", std::move(edges)}};
}

std::string graph_to_dot(const Graph& g, std::string_view comment) {
  std::string out;
  if (!comment.empty()) out += "// " + std::string(comment) + "\n";
  out += "graph {\n";
  const auto& names = g.vertices().names();
  for (std::size_t a = 0; a < g.size(); ++a)
    if (g.degree(a) == 0) out += "  " + names[a] + ";\n";
  for (const auto& [a, b] : g.edges())
    out += "  " + names[a] + " -- " + names[b] + ";\n";
  out += "}\n";
  return out;
}

StateVector state_from_json(const Json& j) {
  constexpr std::string_view what = "state JSON";
  const Json& n_field = require(j, what, "n");
  if (!n_field.is_number_integer()) field_error(what, "n", "expected an integer");
  const auto n = n_field.get<long long>();
  if (n < 1 || n > static_cast<long long>(kMaxStateQubits))
    field_error(what, "n", "must be between 1 and 12");
  Register order = register_from(string_list(j, what, "order"), what, "order");
  if (order.size() != static_cast<std::size_t>(n))
    field_error(what, "order", "expected " + std::to_string(n) + " labels");

  const Json& amps = require(j, what, "amps");
  const std::size_t dim = std::size_t{1} << n;
  if (!amps.is_array() || amps.size() != dim)
    field_error(what, "amps", "expected " + std::to_string(dim) + " [re, im] pairs");
  std::vector<Complex> values;
  values.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const Json& a = amps[i];
    if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number())
      field_error(what, "amps[" + std::to_string(i) + "]", "expected [re, im]");
    values.emplace_back(a[0].get<double>(), a[1].get<double>());
  }
  try {
    return StateVector(std::move(order), std::move(values));
  } catch (const Error& e) {
    field_error(what, "amps", e.what());
  }
}

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Json state_to_json(const StateVector& s) {
  Json amps = Json::array();
  for (const auto& a : s.amplitudes()) amps.push_back(complex_to_json(a));
  return Json{{"n", s.size()}, {"order", s.qubits().names()}, {"amps", std::move(amps)}};
}

Json local_unitary_to_json(const LocalUnitary& u, const Register& qubits) {
  Json factors = Json::array();
  for (std::size_t q = 0; q < u.size(); ++q)
    factors.push_back({{"qubit", qubits.names().at(q)},
                       {"matrix", matrix_to_json(u.factor(q))}});
  return Json{{"global_phase", complex_to_json(u.global_phase())},
              {"factors", std::move(factors)}};
}

Json orbit_to_json(const OrbitReport& report) {
  Json members = Json::array();
  for (const auto& m : report.members) {
    members.push_back({{"graph", graph_to_json(m.graph)},
                       {"path", labels_to_json(m.path)},
                       {"witness", local_unitary_to_json(m.witness, report.seed.vertices())}});
  }
  return Json{{"seed", graph_to_json(report.seed)},
              {"size", report.members.size()},
              {"truncated", report.truncated},
              {"members", std::move(members)}};
}

std::string orbit_to_dot(const OrbitReport& report) {
  std::string out;
  for (std::size_t i = 0; i < report.members.size(); ++i) {
    const auto& m = report.members[i];
    std::string path;
    for (const auto& l : m.path) path += (path.empty() ? "" : ",") + l.name;
    out += graph_to_dot(m.graph, "member " + std::to_string(i) + " path [" + path + "]");
  }
  if (report.truncated) out += "// truncated\n";
  return out;
}

Json witness_to_json(const EquivalenceWitness& w, const Register& qubits) {
  Json out{{"found", w.found},
           {"candidate_rank", w.candidate_rank},
           {"nodes_visited", w.nodes_visited}};
  if (w.found && w.unitary) {
    Json indices = Json::array();
    const auto& group = CliffordGroup::instance();
    for (auto idx : w.clifford_indices)
      indices.push_back({{"index", idx}, {"word", group.at(idx).word}});
    out["cliffords"] = std::move(indices);
    out["unitary"] = local_unitary_to_json(*w.unitary, qubits);
  }
  return out;
}

Json constraint_to_json(const CorrelationConstraint& c) {
  Json terms = Json::array();
  for (const auto& t : c.terms)
    terms.push_back({{"qubit", t.qubit.name}, {"axis", std::string(1, axis_name(t.axis))}});
  return Json{{"text", c.to_string()}, {"terms", std::move(terms)}, {"sign", c.sign}};
}

Json entropy_report(const StateVector& s, const Bipartition& cut) {
  const DensityMatrix rho = reduce(s, cut);
  return Json{{"cut", {{"a", labels_to_json(cut.side_a())},
                       {"b", labels_to_json(cut.side_b())}}},
              {"eigenvalues", rho.eigenvalues()},
              {"entropy", entropy(rho)}};
}

}  // namespace graphstab::io
