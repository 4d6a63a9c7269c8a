#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "graphstab/clifford.hpp"
#include "graphstab/error.hpp"
#include "graphstab/instances.hpp"
#include "graphstab/stabilizer.hpp"
#include "graphstab/statevector.hpp"

using namespace graphstab;

namespace {

const double kEighth = 1.0 / (2.0 * std::sqrt(2.0));

Register qubits(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("q" + std::to_string(i));
  return Register(names);
}

StateVector random_state(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<Complex> amps(std::size_t{1} << n);
  double norm = 0.0;
  for (auto& a : amps) {
    a = {g(rng), g(rng)};
    norm += std::norm(a);
  }
  for (auto& a : amps) a /= std::sqrt(norm);
  return StateVector(qubits(n), amps);
}

Graph random_graph(std::size_t n, std::mt19937_64& rng) {
  Graph g(qubits(n));
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

// Dense oracle: full 2^n x 2^n Kronecker product times vector.
std::vector<Complex> kron_apply(const LocalUnitary& u, std::span<const Complex> v) {
  const std::size_t n = u.size(), dim = v.size();
  std::vector<Complex> out(dim, 0.0);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      Complex entry = u.global_phase();
      for (std::size_t q = 0; q < n; ++q) {
        const std::size_t rb = (r >> (n - 1 - q)) & 1, cb = (c >> (n - 1 - q)) & 1;
        entry *= u.factor(q)[rb * 2 + cb];
      }
      out[r] += entry * v[c];
    }
  return out;
}

LocalUnitary random_local(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
  std::vector<Mat2> f;
  for (std::size_t q = 0; q < n; ++q) {
    const Mat2 a = mat2::exp_i(angle(rng), mat2::pauli_z());
    const Mat2 b = mat2::exp_i(angle(rng), mat2::pauli_y());
    const Mat2 c = mat2::exp_i(angle(rng), mat2::pauli_x());
    f.push_back(mat2::multiply(a, mat2::multiply(b, c)));
  }
  return LocalUnitary(std::polar(1.0, angle(rng)), f);
}

}  // namespace

TEST_CASE("chi00 amplitudes") {
  const StateVector chi = build_chi00();
  CHECK(chi.qubits().names() == std::vector<std::string>{"A3", "A4", "B1", "B2"});
  CHECK(std::abs(chi.amplitude(0b0000) - kEighth) < 1e-15);
  CHECK(std::abs(chi.amplitude(0b0011) + kEighth) < 1e-15);
  for (int idx : {0b0110, 0b1001, 0b1010, 0b1100, 0b1111})
    CHECK(std::abs(chi.amplitude(idx) - kEighth) < 1e-15);
  CHECK(std::abs(chi.amplitude(0b0101) + kEighth) < 1e-15);
  int zeros = 0;
  for (auto a : chi.amplitudes()) zeros += (a == Complex(0.0));
  CHECK(zeros == 8);
  CHECK(std::abs(chi.norm() - 1.0) < 1e-12);
}

TEST_CASE("graph states") {
  const StateVector empty = build_graph_state(Graph(qubits(3)));
  for (auto a : empty.amplitudes()) CHECK(std::abs(a - 1.0 / std::sqrt(8.0)) < 1e-15);

  const StateVector edge = build_graph_state(Graph(Register({"a", "b"}), {{"a", "b"}}));
  const std::vector<double> expected{0.5, 0.5, 0.5, -0.5};
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(edge.amplitude(i) - expected[i]) < 1e-15);

  // Signs frozen from an independent numpy construction (five CZ gates).
  const std::vector<int> gb_signs{1, 1, 1, -1, 1, -1, 1, 1, 1, -1, -1, -1, -1, -1, 1, -1};
  const StateVector gb = build_graph_state(instances::graph_b());
  for (std::size_t i = 0; i < 16; ++i) CHECK(std::abs(gb.amplitude(i) - 0.25 * gb_signs[i]) < 1e-15);
  CHECK(stabilizes(StabilizerSet(instances::graph_b_generators()), gb));

  std::vector<std::string> big;
  for (int i = 0; i < 13; ++i) big.push_back("q" + std::to_string(i));
  CHECK_THROWS_AS(build_graph_state(Graph(Register(big))), Error);
}

TEST_CASE("graph state is independent of gate order") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(6, rng);
    auto edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    StateVector s = StateVector::uniform(g.vertices());
    for (const auto& [a, b] : edges)
      s = apply_controlled_phase(s, g.vertices().names()[b], g.vertices().names()[a]);
    CHECK(max_abs_difference(s, build_graph_state(g)) == 0.0);
  }
}

TEST_CASE("controlled phase") {
  const Register r({"a", "b"});
  const StateVector one = StateVector::basis(r, 3);
  CHECK(apply_controlled_phase(one, "a", "b").amplitude(3) == Complex(-1.0));
  std::mt19937_64 rng(1);
  const StateVector s = random_state(3, rng);
  CHECK(approx_equal(apply_controlled_phase(apply_controlled_phase(s, "q0", "q2"), "q0", "q2"), s, 0.0));
  CHECK(approx_equal(apply_controlled_phase(s, "q0", "q2"), apply_controlled_phase(s, "q2", "q0"), 0.0));
  CHECK_THROWS_AS(apply_controlled_phase(s, "q1", "q1"), Error);
  CHECK_THROWS_AS(apply_controlled_phase(s, "q1", "zz"), Error);
}

TEST_CASE("apply_local") {
  std::mt19937_64 rng(12);
  const StateVector s = random_state(4, rng);
  CHECK(approx_equal(apply_local(LocalUnitary::identity(4), s), s, 0.0));

  const StateVector chi = apply_local(instances::graph_b_to_chi00(),
                                      build_graph_state(instances::graph_b()));
  CHECK(approx_equal(chi, build_chi00()));

  const StateVector gb = apply_local(instances::graph_a_to_graph_b(),
                                     build_graph_state(instances::graph_a()));
  CHECK(approx_equal(gb, build_graph_state(instances::graph_b())));

  CHECK_THROWS_AS(apply_local(LocalUnitary::identity(3), s), Error);

  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const StateVector v = random_state(n, rng);
    const LocalUnitary u = random_local(n, rng);
    const auto expected = kron_apply(u, v.amplitudes());
    const StateVector got = apply_local(u, v);
    for (std::size_t i = 0; i < expected.size(); ++i)
      CHECK(std::abs(got.amplitude(i) - expected[i]) < 1e-12);
    CHECK(std::abs(got.norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("apply_pauli and expectation") {
  std::mt19937_64 rng(6);
  const StateVector s = random_state(3, rng);
  CHECK(approx_equal(apply_pauli(PauliString(3), s), s, 0.0));

  const StateVector zero = StateVector::basis(Register({"a"}), 0);
  CHECK(approx_equal(apply_pauli(parse_pauli("X"), zero), StateVector::basis(Register({"a"}), 1), 0.0));
  // Y|0> = i|1>
  CHECK(std::abs(apply_pauli(parse_pauli("Y"), zero).amplitude(1) - Complex(0, 1)) < 1e-15);

  const StateVector chi = build_chi00();
  CHECK(approx_equal(apply_pauli(parse_pauli("ZZZZ"), chi), chi));
  CHECK(std::abs(expectation(parse_pauli("+XZZX"), chi) - 1.0) < 1e-9);
  CHECK(std::abs(expectation(parse_pauli("+ZXIX"), chi) + 1.0) < 1e-9);
  CHECK(std::abs(expectation(parse_pauli("X"), StateVector::uniform(Register({"a"}))) - 1.0) < 1e-12);
  CHECK_THROWS_AS(expectation(parse_pauli("iZZZZ"), chi), Error);
  CHECK_THROWS_AS(apply_pauli(parse_pauli("ZZ"), chi), Error);

  // Dense oracle for apply_pauli: per-qubit matrices through apply_local.
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<std::uint64_t> bits(0, 7);
    const PauliString p(3, bits(rng), bits(rng), trial % 4);
    std::vector<Mat2> f;
    for (std::size_t q = 0; q < 3; ++q) {
      Mat2 m = mat2::identity();
      if (p.x(q)) m = mat2::multiply(m, mat2::pauli_x());
      if (p.z(q)) m = mat2::multiply(m, mat2::pauli_z());
      f.push_back(m);
    }
    static const Complex ipow[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const LocalUnitary as_local(ipow[p.phase_exp()], f);
    CHECK(max_abs_difference(apply_pauli(p, s), apply_local(as_local, s)) < 1e-12);
  }
}

TEST_CASE("phase-insensitive equality") {
  std::mt19937_64 rng(9);
  const StateVector s = random_state(4, rng);
  for (double theta : {0.0, 0.3, 2.0, -1.1}) {
    const StateVector t = apply_local(LocalUnitary::identity(4).with_phase(std::polar(1.0, theta)), s);
    CHECK(equal_up_to_global_phase(s, t));
    CHECK(approx_equal(s, t) == (theta == 0.0));
  }
  // Oracle: |<chi|G_b>| is exactly 0 (computed with numpy).
  CHECK(std::abs(inner_product(build_chi00(), build_graph_state(instances::graph_b()))) < 1e-12);
  CHECK_FALSE(equal_up_to_global_phase(build_chi00(), build_graph_state(instances::graph_b())));
  CHECK_FALSE(equal_up_to_global_phase(StateVector::basis(qubits(2), 0), StateVector::basis(qubits(2), 1)));
}

TEST_CASE("state construction errors") {
  CHECK_THROWS_AS(StateVector(qubits(2), {1.0, 0.0, 0.0}), Error);
  CHECK_THROWS_AS(StateVector(qubits(1), {1.0, 1.0}), Error);
  CHECK_THROWS_AS(StateVector::uniform(qubits(13)), Error);
}

TEST_CASE("graph generators stabilize graph states up to five qubits") {
  std::mt19937_64 rng(21);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      const Graph g = random_graph(n, rng);
      const StateVector s = build_graph_state(g);
      const StabilizerSet set = graph_generators(g);
      for (const auto& k : set.generators())
        CHECK(max_abs_difference(apply_pauli(k, s), s) < 1e-12);
    }
}

TEST_CASE("symbolic conjugation is consistent with dense evolution") {
  const auto& group = CliffordGroup::instance();
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> pick(0, 23);
  std::uniform_int_distribution<std::uint64_t> bits(0, 15);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Mat2> f;
    for (int q = 0; q < 4; ++q) f.push_back(group.at(pick(rng)).matrix);
    const LocalUnitary u(std::polar(1.0, 0.1 * trial), f);
    const PauliString p(4, bits(rng), bits(rng), trial % 4);
    const StateVector s = random_state(4, rng);
    const StateVector lhs = apply_local(u, apply_pauli(p, s));
    const StateVector rhs = apply_pauli(conjugate_by_local(u, p), apply_local(u, s));
    CHECK(max_abs_difference(lhs, rhs) < 1e-12);
  }
}
