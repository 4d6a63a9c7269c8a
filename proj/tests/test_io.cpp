#include <doctest.h>

#include <string>

#include "graphstab/error.hpp"
#include "graphstab/instances.hpp"
#include "graphstab/io.hpp"

using namespace graphstab;

namespace {

std::string parse_error_of(std::string_view text, bool state = false) {
  try {
    const auto j = io::parse_json(text, "input");
    if (state)
      (void)io::state_from_json(j);
    else
      (void)io::graph_from_json(j);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("graph round trip") {
  const Graph g = instances::graph_b();
  const io::Json j = io::graph_to_json(g);
  CHECK(j.dump() ==
        R"({"vertices":["A3","A4","B1","B2"],"edges":[["A3","A4"],["A3","B1"],["A3","B2"],["A4","B2"],["B1","B2"]]})");
  CHECK(io::graph_from_json(j) == g);
  CHECK(io::graph_from_json(io::parse_json(
            R"({"vertices": ["A3","A4","B1","B2"], "edges": [["A4","A3"],["B1","B2"],["B1","A3"],["A4","B2"]]})",
            "t")) == instances::graph_a());
}

TEST_CASE("graph parse errors") {
  CHECK(parse_error_of("{\n  \"vertices\": [\"a\",\n  }").find("line") != std::string::npos);
  CHECK(parse_error_of("[]").find("expected a JSON object") != std::string::npos);
  CHECK(parse_error_of(R"({"edges": []})").find("field 'vertices'") != std::string::npos);
  CHECK(parse_error_of(R"({"vertices": ["a", 3], "edges": []})").find("field 'vertices[1]'") !=
        std::string::npos);
  CHECK(parse_error_of(R"({"vertices": ["a", "a"], "edges": []})").find("field 'vertices'") !=
        std::string::npos);
  CHECK(parse_error_of(R"({"vertices": [], "edges": []})").find("nonempty") != std::string::npos);
  const std::string three = R"({"vertices": ["a","b","c"], "edges": [["a","b"],["b","c"],)";
  CHECK(parse_error_of(three + R"(["c","z"]]})").find("field 'edges[2]': unknown vertex 'z'") !=
        std::string::npos);
  CHECK(parse_error_of(three + R"(["c","c"]]})").find("self-loop") != std::string::npos);
  CHECK(parse_error_of(three + R"(["b","a"]]})").find("duplicate") != std::string::npos);
  CHECK(parse_error_of(three + R"(["a"]]})").find("field 'edges[2]'") != std::string::npos);
  CHECK(parse_error_of(R"({"vertices": ["a"]})").find("field 'edges'") != std::string::npos);
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/graph.json"), ParseError);
}

TEST_CASE("dot output") {
  Graph g(Register({"a", "b", "c"}), {{"a", "b"}});
  CHECK(io::graph_to_dot(g) == "graph {\n  c;\n  a -- b;\n}\n");
  CHECK(io::graph_to_dot(g, "note") == "// note\ngraph {\n  c;\n  a -- b;\n}\n");
}

TEST_CASE("state round trip and errors") {
  const StateVector chi = build_chi00();
  const io::Json j = io::state_to_json(chi);
  CHECK(j["n"] == 4);
  CHECK(j["order"] == io::Json::array({"A3", "A4", "B1", "B2"}));
  CHECK(j["amps"].size() == 16);
  CHECK(approx_equal(io::state_from_json(j), chi));

  CHECK(parse_error_of(R"({"n": 1, "order": ["a"], "amps": [[1,0],[0,0]]})", true).empty());
  CHECK(parse_error_of(R"({"n": 0, "order": [], "amps": []})", true).find("field 'n'") !=
        std::string::npos);
  CHECK(parse_error_of(R"({"n": 13, "order": [], "amps": []})", true).find("field 'n'") !=
        std::string::npos);
  CHECK(parse_error_of(R"({"n": 1.5, "order": ["a"], "amps": []})", true).find("field 'n'") !=
        std::string::npos);
  CHECK(parse_error_of(R"({"n": 2, "order": ["a"], "amps": []})", true).find("field 'order'") !=
        std::string::npos);
  CHECK(parse_error_of(R"({"n": 1, "order": ["a"], "amps": [[1,0]]})", true)
            .find("field 'amps'") != std::string::npos);
  CHECK(parse_error_of(R"({"n": 1, "order": ["a"], "amps": [[1,0],[0]]})", true)
            .find("field 'amps[1]'") != std::string::npos);
  CHECK(parse_error_of(R"({"n": 1, "order": ["a"], "amps": [[1,0],[1,0]]})", true)
            .find("field 'amps'") != std::string::npos);
}

TEST_CASE("orbit and witness schemas") {
  const OrbitReport orbit = enumerate_orbit(instances::graph_a());
  const io::Json j = io::orbit_to_json(orbit);
  CHECK(j["size"] == 11);
  CHECK(j["truncated"] == false);
  CHECK(j["seed"] == io::graph_to_json(instances::graph_a()));
  REQUIRE(j["members"].size() == 11);
  for (const auto& m : j["members"]) {
    CHECK(m.contains("graph"));
    CHECK(m["path"].is_array());
    CHECK(m["witness"]["global_phase"].size() == 2);
    CHECK(m["witness"]["factors"].size() == 4);
    CHECK(m["witness"]["factors"][0]["matrix"].size() == 2);
  }
  CHECK(j["members"][0]["path"].empty());

  const std::string dot = io::orbit_to_dot(orbit);
  CHECK(dot.find("// member 0 path []\ngraph {") == 0);
  CHECK(dot.find("// truncated") == std::string::npos);
  CHECK(io::orbit_to_dot(enumerate_orbit(instances::graph_a(), 2)).find("// truncated") !=
        std::string::npos);

  const auto w = lc_search(build_graph_state(instances::graph_b()), build_chi00());
  const io::Json wj = io::witness_to_json(w, instances::four_qubits());
  CHECK(wj["found"] == true);
  CHECK(wj["cliffords"].size() == 4);
  CHECK(wj["cliffords"][0]["word"].is_string());
  CHECK(wj["unitary"]["factors"][3]["qubit"] == "B2");

  EquivalenceWitness none;
  const io::Json nj = io::witness_to_json(none, instances::four_qubits());
  CHECK(nj["found"] == false);
  CHECK_FALSE(nj.contains("unitary"));
}

TEST_CASE("entropy and constraint reports") {
  const Register r = instances::four_qubits();
  const std::vector<std::string> side{"A3", "B2"};
  const io::Json j = io::entropy_report(build_chi00(), Bipartition(r, side));
  CHECK(j["cut"]["a"] == io::Json::array({"A3", "B2"}));
  CHECK(j["cut"]["b"] == io::Json::array({"A4", "B1"}));
  CHECK(std::abs(j["entropy"].get<double>() - 1.0) < 1e-9);
  CHECK(j["eigenvalues"].size() == 4);

  const io::Json c = io::constraint_to_json(instances::ghz_constraints()[1]);
  CHECK(c["sign"] == -1);
  CHECK(c["text"] == "-m_z^{A3} m_x^{A4} m_x^{B2} = 1");
  CHECK(c["terms"][1]["axis"] == "x");
}
