#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace critgen {

/// Set of vertices of a graph on at most 62 vertices, bit v = vertex v.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 62;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
constexpr VertexSet first_n(int n) { return n == 0 ? 0 : (~VertexSet{0} >> (64 - n)); }
constexpr int popcount(VertexSet s) { return std::popcount(s); }
constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1U; }
constexpr int lowest(VertexSet s) { return std::countr_zero(s); }

/// Calls f(v) for each vertex of s in increasing order.
template <typename F>
void for_each_vertex(VertexSet s, F&& f) {
  while (s != 0) {
    const int v = std::countr_zero(s);
    s &= s - 1;
    f(v);
  }
}

std::vector<int> to_vector(VertexSet s);
VertexSet to_set(std::span<const int> vertices);
VertexSet to_set(std::initializer_list<int> vertices);

/// Simple undirected graph with per-vertex adjacency bitsets.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);
  /// Validates symmetry, irreflexivity and range; throws Error otherwise.
  static Graph from_rows(std::span<const VertexSet> rows);

  int order() const { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const { return first_n(order()); }
  VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::span<const VertexSet> rows() const { return adj_; }
  bool adjacent(int u, int v) const { return contains(neighbors(u), v); }
  int degree(int v) const { return popcount(neighbors(v)); }
  int edge_count() const;

  /// N(X): union of neighborhoods of X minus X.
  VertexSet neighbors_of_set(VertexSet x) const;
  bool is_clique(VertexSet s) const;
  bool is_independent(VertexSet s) const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adj_;
};

Graph induced_subgraph(const Graph& g, VertexSet keep);
Graph delete_vertex(const Graph& g, int v);
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph add_universal_vertices(const Graph& g, int count);
/// Returns g plus one vertex (index n) whose neighborhood is `nbrs`.
Graph add_vertex(const Graph& g, VertexSet nbrs);
/// Vertex v of g becomes vertex perm[v] of the result.
Graph permute(const Graph& g, std::span<const int> perm);

/// Connected components, each as a vertex set, ordered by lowest vertex.
std::vector<VertexSet> components(const Graph& g, VertexSet within);
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

/// Multi-line "v: a b c" adjacency listing.
std::string to_adjacency_text(const Graph& g);

}  // namespace critgen
