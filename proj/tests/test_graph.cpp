#include <doctest.h>

#include <random>
#include <set>

#include "graphstab/error.hpp"
#include "graphstab/graph.hpp"
#include "graphstab/instances.hpp"

using namespace graphstab;

namespace {

std::set<std::pair<int, int>> edge_set(const Graph& g) {
  auto e = g.edges();
  return {e.begin(), e.end()};
}

std::set<std::string> names(const std::vector<QubitLabel>& ls) {
  std::set<std::string> out;
  for (const auto& l : ls) out.insert(l.name);
  return out;
}

Graph random_graph(std::size_t n, std::mt19937_64& rng, double p = 0.5) {
  std::vector<std::string> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
  Graph g{Register(vs)};
  std::bernoulli_distribution coin(p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST_CASE("local complementation at A4 turns the square into graph b") {
  const Graph tau = local_complement(instances::graph_a(), "A4");
  const std::set<std::pair<int, int>> expected{{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}};
  CHECK(edge_set(tau) == expected);
  CHECK(tau == instances::graph_b());
}

TEST_CASE("neighbors") {
  CHECK(names(neighbors(instances::graph_a(), "A4")) == std::set<std::string>{"A3", "B2"});
  CHECK(names(neighbors(instances::graph_b(), "A3")) ==
        std::set<std::string>{"A4", "B1", "B2"});
  CHECK(neighbors(Graph(instances::four_qubits()), "B1").empty());
  CHECK_THROWS_WITH_AS(neighbors(instances::graph_a(), "C7"),
                       doctest::Contains("C7"), Error);
}

TEST_CASE("local complement edge cases") {
  const Graph g = instances::graph_a();
  CHECK(local_complement(local_complement(g, "A3"), "A3") == g);

  Graph isolated(Register({"a", "b", "c"}));
  isolated.add_edge(0, 1);
  CHECK(local_complement(isolated, "c") == isolated);
  CHECK_THROWS_WITH_AS(local_complement(g, "nope"), doctest::Contains("nope"), Error);
}

TEST_CASE("canonical key") {
  const Graph empty(instances::four_qubits());
  CHECK(canonical_key(empty).is_zero());
  CHECK(canonical_key(empty).words.size() == 1);
  CHECK(canonical_key(instances::graph_a()) != canonical_key(instances::graph_b()));

  // Direct edge comparison agrees with the key comparison.
  const Graph ga = instances::graph_a();
  for (const auto& v : ga.vertices().names()) {
    const Graph t = local_complement(ga, v);
    CHECK((edge_set(t) == edge_set(ga)) == (canonical_key(t) == canonical_key(ga)));
    CHECK(canonical_key(t) != canonical_key(ga));  // every vertex of the square has degree 2
  }

  // Bit layout: upper triangle, row-major. For n=4: (0,1)(0,2)(0,3)(1,2)(1,3)(2,3).
  Graph one(instances::four_qubits());
  one.add_edge(1, 3);
  CHECK(canonical_key(one).words[0] == (1u << 4));
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(Register({"a", "a"}), Error);
  CHECK_THROWS_AS(Graph(Register{}), Error);
  std::vector<std::string> many;
  for (int i = 0; i < 33; ++i) many.push_back("q" + std::to_string(i));
  CHECK_THROWS_AS(Graph(Register(many)), Error);
  many.pop_back();
  CHECK_NOTHROW(Graph(Register(many)));
  CHECK_THROWS_AS(Graph(Register({"a", "b"}), {{"a", "a"}}), Error);
  CHECK_THROWS_AS(Graph(Register({"a", "b"}), {{"a", "b"}, {"b", "a"}}), Error);
  CHECK_THROWS_AS(Graph(Register({"a", "b"}), {{"a", "z"}}), Error);
}

TEST_CASE("local complementation properties on random graphs") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(size(rng), rng);
    const std::size_t a = std::uniform_int_distribution<std::size_t>(0, g.size() - 1)(rng);
    const std::string& name = g.vertices().names()[a];
    const Graph t = local_complement(g, name);

    CHECK(local_complement(t, name) == g);
    CHECK(t.vertices() == g.vertices());
    CHECK(t.degree(a) == g.degree(a));

    const std::size_t d = g.degree(a);
    std::set<std::pair<int, int>> diff;
    const auto ge = edge_set(g), te = edge_set(t);
    std::set_symmetric_difference(ge.begin(), ge.end(), te.begin(), te.end(),
                                  std::inserter(diff, diff.begin()));
    CHECK(diff.size() == d * (d - 1) / 2);  // d = 0 gives 0 despite the wrap
    for (const auto& [b, c] : diff) {
      CHECK(g.has_edge(a, static_cast<std::size_t>(b)));
      CHECK(g.has_edge(a, static_cast<std::size_t>(c)));
    }
  }
}
