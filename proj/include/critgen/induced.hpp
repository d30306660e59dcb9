#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "critgen/graph.hpp"

namespace critgen {

/// image[u] is the vertex of the host graph playing vertex u of the pattern.
using Embedding = std::vector<int>;

bool is_induced_embedding(const Graph& g, const Graph& h, std::span<const int> image);

/// Some induced copy of h in g, or nullopt if g is h-free. Exhaustive.
std::optional<Embedding> find_induced(const Graph& g, const Graph& h);

/// Induced copy of h using only vertices of `within`.
std::optional<Embedding> find_induced_within(const Graph& g, const Graph& h, VertexSet within);

/// Induced copy of h whose image contains `anchor`.
std::optional<Embedding> find_induced_through(const Graph& g, const Graph& h, int anchor);

/// Calls visitor on every induced copy (each labeled embedding once) until
/// it returns true.
void for_each_induced(const Graph& g, const Graph& h, const std::function<bool(const Embedding&)>& visitor);

bool is_free(const Graph& g, std::span<const Graph> forbidden);

/// Neighborhoods N for which g plus a vertex adjacent to exactly N stays
/// free of every forbidden graph. Built once per parent from the induced
/// copies of each h - x in g.
class FreeNeighborhoods {
 public:
  FreeNeighborhoods(const Graph& g, const std::vector<Graph>& forbidden);

  /// Visits the admissible neighborhoods in increasing bitset order.
  void visit(const std::function<void(VertexSet)>& visitor) const;

 private:
  // N is rejected when N restricted to support equals pattern.
  struct Trace {
    VertexSet support = 0;
    VertexSet pattern = 0;
    auto operator<=>(const Trace&) const = default;
  };

  int order_ = 0;
  bool hopeless_ = false;
  std::vector<std::vector<Trace>> by_lowest_;
};

/// All admissible neighborhoods of FreeNeighborhoods, in order.
std::vector<VertexSet> free_neighborhoods(const Graph& g, const std::vector<Graph>& forbidden);

}  // namespace critgen
