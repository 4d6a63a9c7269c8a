#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graphstab {

inline constexpr std::size_t kMaxGraphVertices = 32;

struct QubitLabel {
  std::string name;
  int position = 0;

  friend bool operator==(const QubitLabel&, const QubitLabel&) = default;
};

/// Ordered, uniquely named qubits. Position i is the i-th name; the order is
/// fixed at construction and decides every bit and ket convention downstream.
class Register {
 public:
  Register() = default;
  explicit Register(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  QubitLabel label(std::size_t position) const;
  std::vector<QubitLabel> labels() const;

  /// Position of `name`; throws Error naming the label when absent.
  int position_of(std::string_view name) const;
  bool contains(std::string_view name) const;

  friend bool operator==(const Register&, const Register&) = default;

 private:
  std::vector<std::string> names_;
};

/// Labelled simple undirected graph on at most 32 vertices. Rows of the
/// adjacency matrix are stored as 32-bit words; bit j of row i is edge {i,j}.
class Graph {
 public:
  explicit Graph(Register vertices);
  Graph(Register vertices,
        const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t size() const { return vertices_.size(); }
  const Register& vertices() const { return vertices_; }

  bool has_edge(std::size_t a, std::size_t b) const {
    return (rows_[a] >> b) & 1u;
  }
  std::uint32_t row(std::size_t a) const { return rows_[a]; }
  std::size_t degree(std::size_t a) const;
  std::size_t edge_count() const;

  /// Edges as position pairs (i < j), row-major.
  std::vector<std::pair<int, int>> edges() const;

  /// Toggles {a,b}. Rejects self-loops.
  void toggle_edge(std::size_t a, std::size_t b);
  void add_edge(std::size_t a, std::size_t b);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Register vertices_;
  std::vector<std::uint32_t> rows_;
};

/// Upper-triangular adjacency bits in row-major order, packed into 64-bit
/// words. Only meaningful between graphs sharing one vertex order.
struct GraphKey {
  std::size_t vertex_count = 0;
  std::vector<std::uint64_t> words;

  bool is_zero() const;
  friend auto operator<=>(const GraphKey&, const GraphKey&) = default;
};

struct GraphKeyHash {
  std::size_t operator()(const GraphKey& key) const noexcept;
};

std::vector<QubitLabel> neighbors(const Graph& g, std::string_view a);

/// Complements the neighbourhood of `a`: every pair of distinct neighbours
/// has its edge toggled.
Graph local_complement(const Graph& g, std::string_view a);

GraphKey canonical_key(const Graph& g);

}  // namespace graphstab
