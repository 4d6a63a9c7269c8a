// graphstab: command-line front end.
//
// Exit status: 0 success / all checks passed, 1 a check failed or no witness
// was found, 2 usage or parse error.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "graphstab/entanglement.hpp"
#include "graphstab/error.hpp"
#include "graphstab/instances.hpp"
#include "graphstab/io.hpp"
#include "graphstab/lc_equiv.hpp"
#include "graphstab/nonlocality.hpp"
#include "graphstab/verify.hpp"

namespace {

using graphstab::io::Json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_state_build(const std::string& kind, const std::string& file) {
  if (kind == "chi00") {
    if (!file.empty()) throw graphstab::ParseError("'state build chi00' takes no file");
    print_json(graphstab::io::state_to_json(graphstab::build_chi00()));
    return kOk;
  }
  if (kind == "graph") {
    if (file.empty()) throw graphstab::ParseError("'state build graph' needs a graph file");
    const auto g = graphstab::io::graph_from_json(graphstab::io::read_json_file(file));
    print_json(graphstab::io::state_to_json(graphstab::build_graph_state(g)));
    return kOk;
  }
  throw graphstab::ParseError("unknown state kind '" + kind + "' (expected chi00 or graph)");
}

int cmd_orbit(const std::string& file, std::size_t max_members,
              const std::string& format) {
  const auto g = graphstab::io::graph_from_json(graphstab::io::read_json_file(file));
  const auto report = graphstab::enumerate_orbit(g, max_members);
  if (format == "dot")
    std::cout << graphstab::io::orbit_to_dot(report);
  else
    print_json(graphstab::io::orbit_to_json(report));
  return kOk;
}

int cmd_entropy(const std::string& file, const std::string& cut) {
  const auto s = graphstab::io::state_from_json(graphstab::io::read_json_file(file));
  const auto side = split_labels(cut);
  std::optional<graphstab::Bipartition> bipartition;
  try {
    bipartition.emplace(s.qubits(), side);
  } catch (const graphstab::Error& e) {
    throw graphstab::ParseError(std::string("--cut: ") + e.what());
  }
  print_json(graphstab::io::entropy_report(s, *bipartition));
  return kOk;
}

int cmd_ghz_check() {
  using namespace graphstab;
  const auto constraints = instances::ghz_constraints();
  const auto origins = instances::ghz_origins();
  const auto quantum = quantum_check(build_chi00(), constraints, origins);
  const auto lhv = lhv_solve_exhaustive(constraints);
  const auto cert = lhv_contradiction_certificate(constraints);

  Json rows = Json::array();
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    Json row = io::constraint_to_json(constraints[i]);
    row["origin"] = to_string(origins[i]);
    row["expectation"] = quantum.predictions[i].expectation;
    row["satisfied"] = quantum.predictions[i].satisfied;
    rows.push_back(std::move(row));
  }
  Json lhv_json{{"satisfiable", lhv.satisfiable},
                {"assignments_scanned", lhv.assignments_scanned}};
  const bool ok = quantum.all_satisfied && !lhv.satisfiable;
  print_json(Json{{"constraints", std::move(rows)},
                  {"quantum_all_satisfied", quantum.all_satisfied},
                  {"lhv", std::move(lhv_json)},
                  {"certificate", {{"contradiction", cert.contradiction},
                                   {"subset", cert.subset}}},
                  {"passed", ok}});
  return ok ? kOk : kFailed;
}

int cmd_lc_search(const std::string& src, const std::string& dst) {
  const auto a = graphstab::io::state_from_json(graphstab::io::read_json_file(src));
  const auto b = graphstab::io::state_from_json(graphstab::io::read_json_file(dst));
  const auto w = graphstab::lc_search(a, b);
  print_json(graphstab::io::witness_to_json(w, a.qubits()));
  return w.found ? kOk : kFailed;
}

int cmd_verify_all(bool json, double tolerance) {
  graphstab::VerifyOptions options;
  options.tolerance = tolerance;
  const auto report = graphstab::verify_all(options);
  if (json)
    print_json(report.to_json());
  else
    std::cout << report.to_table();
  return report.passed() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph-state, stabilizer and local-Clifford verification toolkit"};
  app.require_subcommand(1);

  auto* state = app.add_subcommand("state", "Build dense state vectors");
  state->require_subcommand(1);
  auto* build = state->add_subcommand("build", "Emit a state as JSON");
  std::string state_kind, state_file;
  build->add_option("kind", state_kind, "chi00 | graph")->required();
  build->add_option("file", state_file, "graph JSON (for 'graph')");

  auto* orbit = app.add_subcommand("orbit", "Enumerate the local-complementation orbit");
  std::string orbit_file, orbit_format = "json";
  std::size_t orbit_max = 4096;
  orbit->add_option("file", orbit_file, "graph JSON")->required();
  orbit->add_option("--max", orbit_max, "maximum members")->check(CLI::PositiveNumber);
  orbit->add_option("--format", orbit_format, "json | dot")
      ->check(CLI::IsMember({"json", "dot"}));

  auto* ent = app.add_subcommand("entropy", "Entanglement entropy across a cut");
  std::string ent_file, ent_cut;
  ent->add_option("state", ent_file, "state JSON")->required();
  ent->add_option("--cut", ent_cut, "comma-separated labels on one side")->required();

  auto* ghz = app.add_subcommand("ghz-check", "Quantum predictions vs local hidden variables");

  auto* search = app.add_subcommand("lc-search", "Search for a local-Clifford witness");
  std::string search_src, search_dst;
  search->add_option("src", search_src, "source state JSON")->required();
  search->add_option("dst", search_dst, "target state JSON")->required();

  auto* verify = app.add_subcommand("verify-all", "Run every reference check");
  bool verify_json = false;
  double verify_tol = 1e-9;
  verify->add_flag("--json", verify_json, "emit the report as JSON");
  verify->add_option("--tolerance", verify_tol, "amplitude tolerance")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*build) return cmd_state_build(state_kind, state_file);
    if (*orbit) return cmd_orbit(orbit_file, orbit_max, orbit_format);
    if (*ent) return cmd_entropy(ent_file, ent_cut);
    if (*ghz) return cmd_ghz_check();
    if (*search) return cmd_lc_search(search_src, search_dst);
    if (*verify) return cmd_verify_all(verify_json, verify_tol);
  } catch (const graphstab::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const graphstab::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
