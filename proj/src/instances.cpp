#include "graphstab/instances.hpp"

#include <numbers>

namespace graphstab::instances {
namespace {

constexpr double kQuarter = std::numbers::pi / 4.0;

Setting m(const char* qubit, Axis axis) {
  const Register r = four_qubits();
  return Setting{r.label(static_cast<std::size_t>(r.position_of(qubit))), axis};
}

}  // namespace

Register four_qubits() { return Register({"A3", "A4", "B1", "B2"}); }

Graph graph_a() {
  return Graph(four_qubits(),
               {{"A3", "A4"}, {"B1", "B2"}, {"A3", "B1"}, {"A4", "B2"}});
}

Graph graph_b() {
  return Graph(four_qubits(), {{"A3", "A4"},
                               {"A3", "B1"},
                               {"A3", "B2"},
                               {"A4", "B2"},
                               {"B1", "B2"}});
}

LocalUnitary graph_a_to_graph_b() {
  return LocalUnitary(std::polar(1.0, kQuarter),
                      {mat2::exp_i(-kQuarter, mat2::pauli_z()),
                       mat2::exp_i(kQuarter, mat2::pauli_x()), mat2::identity(),
                       mat2::exp_i(-kQuarter, mat2::pauli_z())});
}

LocalUnitary graph_b_to_chi00() {
  return LocalUnitary(1.0, {mat2::pauli_z(), mat2::identity(), mat2::identity(),
                            mat2::multiply(mat2::pauli_z(), mat2::hadamard())});
}

std::vector<PauliString> graph_b_generators() {
  return {parse_pauli("+XZZZ"), parse_pauli("+ZXIZ"), parse_pauli("+ZIXZ"),
          parse_pauli("+ZZZX")};
}

std::vector<PauliString> chi00_generators() {
  return {parse_pauli("+XZZX"), parse_pauli("-ZXIX"), parse_pauli("-ZIXX"),
          parse_pauli("+ZZZZ")};
}

std::vector<PauliString> ghz_origins() {
  return {parse_pauli("+XZZX"), parse_pauli("-ZXIX"), parse_pauli("+ZZZZ"),
          parse_pauli("+XXIZ")};
}

std::vector<CorrelationConstraint> ghz_constraints() {
  using enum Axis;
  return {
      {{m("A3", x), m("A4", z), m("B1", z), m("B2", x)}, +1},
      {{m("A3", z), m("A4", x), m("B2", x)}, -1},
      {{m("A3", z), m("A4", z), m("B1", z), m("B2", z)}, +1},
      {{m("A3", x), m("A4", x), m("B2", z)}, +1},
  };
}

}  // namespace graphstab::instances
