#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "critgen/coloring.hpp"
#include "critgen/graph.hpp"

namespace critgen {

/// Evidence that g is k-vertex-critical: a refuted (k-1)-coloring search and,
/// for every vertex v, a (k-1)-coloring of g - v (labels compacted).
struct CriticalityCertificate {
  int k = 0;
  SearchTranscript refutation;
  std::vector<Coloring> per_vertex;

  /// "k: <k>" then one line "v: c1 ... c_{n-1}" per vertex.
  std::string to_text() const;
};

std::optional<CriticalityCertificate> is_k_vertex_critical(const Graph& g, int k);

/// Human-readable first failing condition, or empty if g is k-vertex-critical.
std::string criticality_failure(const Graph& g, int k);

/// Re-checks every per-vertex coloring and re-derives chi(g) >= k.
bool verify_certificate(const Graph& g, const CriticalityCertificate& cert);

/// A clique K whose removal disconnects g. For disconnected g the empty
/// set is returned; graphs with at most one component and no clique cutset
/// yield nullopt.
std::optional<VertexSet> has_clique_cutset(const Graph& g);

/// Nonadjacent (u, v) with N(v) a subset of N(u).
std::optional<std::pair<int, int>> find_dominated_pair(const Graph& g);
std::vector<std::pair<int, int>> all_dominated_pairs(const Graph& g);

/// A vertex u such that every `colors`-coloring of g - u extends to u, that
/// is, no such coloring puts all colors on N(u). Lowest index first.
std::optional<int> find_extendable_vertex(const Graph& g, int colors);
std::vector<int> extendable_vertices(const Graph& g, int colors);

struct DominatedSubsets {
  VertexSet x = 0;
  VertexSet y = 0;
};

/// Disjoint nonempty X, Y (each of size <= max_size) with X anticomplete to
/// Y, chi(G[X]) <= chi(G[Y]) and Y complete to N(X). Subsets are scanned in
/// lexicographic order of their sorted vertex lists; the first hit wins.
std::optional<DominatedSubsets> find_dominated_subsets(const Graph& g, int max_size);
std::vector<DominatedSubsets> all_dominated_subsets(const Graph& g, int max_size);

}  // namespace critgen
