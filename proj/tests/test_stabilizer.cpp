#include <doctest.h>

#include <random>

#include "graphstab/clifford.hpp"
#include "graphstab/error.hpp"
#include "graphstab/instances.hpp"
#include "graphstab/stabilizer.hpp"

using namespace graphstab;

namespace {

Graph graph_from_mask(const Register& r, std::uint32_t mask) {
  Graph g(r);
  std::size_t bit = 0;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j, ++bit)
      if ((mask >> bit) & 1u) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST_CASE("graph generators") {
  CHECK(graph_generators(instances::graph_b()).generators() == instances::graph_b_generators());
  CHECK(to_string(graph_generators(instances::graph_b())) == "+XZZZ\n+ZXIZ\n+ZIXZ\n+ZZZX\n");

  const auto empty = graph_generators(Graph(Register({"a", "b", "c"})));
  CHECK(empty.generators() ==
        std::vector{parse_pauli("XII"), parse_pauli("IXI"), parse_pauli("IIX")});

  const auto edge = graph_generators(Graph(Register({"a", "b"}), {{"a", "b"}}));
  CHECK(edge.generators() == std::vector{parse_pauli("XZ"), parse_pauli("ZX")});
}

TEST_CASE("stabilizes") {
  CHECK(stabilizes(StabilizerSet(instances::chi00_generators()), build_chi00()));
  CHECK(stabilizes(StabilizerSet(instances::graph_b_generators()),
                   build_graph_state(instances::graph_b())));
  const StateVector zero = StateVector::basis(Register({"a"}), 0);
  CHECK_FALSE(stabilizes(StabilizerSet({parse_pauli("-Z")}), zero));
  CHECK(stabilizes(StabilizerSet({parse_pauli("Z")}), zero));
  CHECK_THROWS_AS(stabilizes(StabilizerSet({parse_pauli("ZZ")}), zero), Error);
}

TEST_CASE("set invariants are enforced") {
  CHECK_THROWS_AS(StabilizerSet({parse_pauli("XI"), parse_pauli("ZI")}), Error);
  CHECK_THROWS_AS(StabilizerSet({parse_pauli("ZZ"), parse_pauli("-ZZ")}), Error);
  CHECK_THROWS_AS(StabilizerSet({parse_pauli("iZZ")}), Error);
  CHECK_THROWS_AS(StabilizerSet({parse_pauli("ZZ"), parse_pauli("ZZZ")}), Error);
}

TEST_CASE("conjugate_set") {
  const StabilizerSet k(instances::graph_b_generators());
  const StabilizerSet kb = conjugate_set(instances::graph_b_to_chi00(), k);
  CHECK(kb.generators() == instances::chi00_generators());
  std::vector<int> signs;
  for (const auto& g : kb.generators()) signs.push_back(*g.sign());
  CHECK(signs == std::vector{+1, -1, -1, +1});

  CHECK(conjugate_set(LocalUnitary::identity(4), k) == k);

  const LocalUnitary h = LocalUnitary::identity(4).then_on(2, mat2::hadamard());
  CHECK(conjugate_set(h, conjugate_set(h, k)) == k);
  CHECK(conjugate_set(h, k) != k);
}

TEST_CASE("every labelled 4-vertex graph is stabilized by its generators") {
  const Register r({"A3", "A4", "B1", "B2"});
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    const Graph g = graph_from_mask(r, mask);
    CAPTURE(mask);
    CHECK(stabilizes(graph_generators(g), build_graph_state(g)));
  }
}

TEST_CASE("random 5-vertex graphs and transported stabilizers") {
  const Register r({"a", "b", "c", "d", "e"});
  const auto& group = CliffordGroup::instance();
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::uint32_t> masks(0, 1023);
  std::uniform_int_distribution<std::size_t> pick(0, 23);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = graph_from_mask(r, masks(rng));
    const StabilizerSet k = graph_generators(g);
    const StateVector s = build_graph_state(g);
    CHECK(stabilizes(k, s));

    std::vector<Mat2> f;
    for (int q = 0; q < 5; ++q) f.push_back(group.at(pick(rng)).matrix);
    const LocalUnitary u(1.0, f);
    const StabilizerSet moved = conjugate_set(u, k);  // constructor re-checks invariants
    CHECK(independent(moved.generators()));
    CHECK(stabilizes(moved, apply_local(u, s)));
  }
}
