#include "graphstab/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_set>

#include "graphstab/error.hpp"

namespace graphstab {

Register::Register(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string_view> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw Error("qubit label must be non-empty");
    if (!seen.insert(name).second)
      throw Error("duplicate qubit label '" + name + "'");
  }
}

QubitLabel Register::label(std::size_t position) const {
  return QubitLabel{names_.at(position), static_cast<int>(position)};
}

std::vector<QubitLabel> Register::labels() const {
  std::vector<QubitLabel> out;
  out.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) out.push_back(label(i));
  return out;
}

int Register::position_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    throw Error("unknown qubit label '" + std::string(name) + "'");
  return static_cast<int>(it - names_.begin());
}

bool Register::contains(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

Graph::Graph(Register vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() == 0) throw Error("graph needs at least one vertex");
  if (vertices_.size() > kMaxGraphVertices)
    throw Error("graph has " + std::to_string(vertices_.size()) +
                " vertices; at most 32 are supported");
  rows_.assign(vertices_.size(), 0u);
}

Graph::Graph(Register vertices,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : Graph(std::move(vertices)) {
  for (const auto& [a, b] : edges) {
    const auto i = static_cast<std::size_t>(vertices_.position_of(a));
    const auto j = static_cast<std::size_t>(vertices_.position_of(b));
    if (i == j) throw Error("self-loop on '" + a + "'");
    if (has_edge(i, j))
      throw Error("duplicate edge {" + a + ", " + b + "}");
    add_edge(i, j);
  }
}

std::size_t Graph::degree(std::size_t a) const {
  return static_cast<std::size_t>(std::popcount(rows_.at(a)));
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto r : rows_) twice += static_cast<std::size_t>(std::popcount(r));
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (has_edge(i, j)) out.emplace_back(int(i), int(j));
  return out;
}

void Graph::toggle_edge(std::size_t a, std::size_t b) {
  if (a >= size() || b >= size()) throw Error("vertex position out of range");
  if (a == b) throw Error("self-loop on '" + vertices_.names()[a] + "'");
  rows_[a] ^= 1u << b;
  rows_[b] ^= 1u << a;
}

void Graph::add_edge(std::size_t a, std::size_t b) {
  if (!(a < size() && b < size() && has_edge(a, b))) toggle_edge(a, b);
}

bool GraphKey::is_zero() const {
  return std::all_of(words.begin(), words.end(),
                     [](std::uint64_t w) { return w == 0; });
}

std::size_t GraphKeyHash::operator()(const GraphKey& key) const noexcept {
  std::size_t h = std::hash<std::size_t>{}(key.vertex_count);
  for (auto w : key.words)
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::vector<QubitLabel> neighbors(const Graph& g, std::string_view a) {
  const auto pos = static_cast<std::size_t>(g.vertices().position_of(a));
  std::vector<QubitLabel> out;
  for (std::size_t b = 0; b < g.size(); ++b)
    if (g.has_edge(pos, b)) out.push_back(g.vertices().label(b));
  return out;
}

Graph local_complement(const Graph& g, std::string_view a) {
  const auto pos = static_cast<std::size_t>(g.vertices().position_of(a));
  Graph out = g;
  const std::uint32_t hood = g.row(pos);
  for (std::size_t b = 0; b < g.size(); ++b) {
    if (!((hood >> b) & 1u)) continue;
    for (std::size_t c = b + 1; c < g.size(); ++c)
      if ((hood >> c) & 1u) out.toggle_edge(b, c);
  }
  return out;
}

GraphKey canonical_key(const Graph& g) {
  const std::size_t n = g.size();
  GraphKey key;
  key.vertex_count = n;
  key.words.assign((n * (n - 1) / 2 + 63) / 64, 0);
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++bit) {
      if (g.has_edge(i, j)) key.words[bit / 64] |= std::uint64_t{1} << (bit % 64);
    }
  }
  return key;
}

}  // namespace graphstab
