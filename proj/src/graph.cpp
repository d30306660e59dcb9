#include "critgen/graph.hpp"

#include <sstream>

#include "critgen/error.hpp"

namespace critgen {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOk: return "Ok";
    case ErrorCode::kByteOutOfRange: return "ByteOutOfRange";
    case ErrorCode::kTruncatedPayload: return "TruncatedPayload";
    case ErrorCode::kTrailingBits: return "TrailingBits";
    case ErrorCode::kOversize: return "Oversize";
    case ErrorCode::kBadVertex: return "BadVertex";
    case ErrorCode::kNotForced: return "NotForced";
    case ErrorCode::kSeedNotFree: return "SeedNotFree";
    case ErrorCode::kNotACycle: return "NotACycle";
    case ErrorCode::kNotAnAntihole: return "NotAnAntihole";
    case ErrorCode::kNotInClass: return "NotInClass";
    case ErrorCode::kTaxonomyViolation: return "TaxonomyViolation";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kInternalContradiction: return "InternalContradiction";
    case ErrorCode::kUnknownName: return "UnknownName";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(ErrorCode::kOversize,
                "graph order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
  }
}

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw Error(ErrorCode::kBadVertex, "vertex " + std::to_string(v) + " out of range");
  }
}

}  // namespace

std::vector<int> to_vector(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(s)));
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

VertexSet to_set(std::span<const int> vertices) {
  VertexSet s = 0;
  for (int v : vertices) s |= bit(v);
  return s;
}

VertexSet to_set(std::initializer_list<int> vertices) {
  return to_set(std::span<const int>(vertices.begin(), vertices.size()));
}

Graph::Graph(int n) {
  check_order(n);
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::from_rows(std::span<const VertexSet> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  Graph g(n);
  for (int v = 0; v < n; ++v) {
    const VertexSet row = rows[static_cast<std::size_t>(v)];
    if ((row & ~first_n(n)) != 0 || contains(row, v)) {
      throw Error(ErrorCode::kInvalidArgument, "bad adjacency row for vertex " + std::to_string(v));
    }
    for_each_vertex(row, [&](int u) {
      if (!contains(rows[static_cast<std::size_t>(u)], v)) {
        throw Error(ErrorCode::kInvalidArgument, "asymmetric adjacency at " + std::to_string(v));
      }
    });
    g.adj_[static_cast<std::size_t>(v)] = row;
  }
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet row : adj_) twice += popcount(row);
  return twice / 2;
}

VertexSet Graph::neighbors_of_set(VertexSet x) const {
  VertexSet out = 0;
  for_each_vertex(x, [&](int v) { out |= neighbors(v); });
  return out & ~x;
}

bool Graph::is_clique(VertexSet s) const {
  bool ok = true;
  for_each_vertex(s, [&](int v) {
    if (((neighbors(v) | bit(v)) & s) != s) ok = false;
  });
  return ok;
}

bool Graph::is_independent(VertexSet s) const {
  bool ok = true;
  for_each_vertex(s, [&](int v) {
    if (neighbors(v) & s) ok = false;
  });
  return ok;
}

void Graph::add_edge(int u, int v) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (u == v) throw Error(ErrorCode::kBadVertex, "self-loop at " + std::to_string(u));
  adj_[static_cast<std::size_t>(u)] |= bit(v);
  adj_[static_cast<std::size_t>(v)] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  adj_[static_cast<std::size_t>(u)] &= ~bit(v);
  adj_[static_cast<std::size_t>(v)] &= ~bit(u);
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  keep &= g.vertices();
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for_each_vertex(keep, [&](int v) { index[static_cast<std::size_t>(v)] = next++; });
  Graph h(next);
  for_each_vertex(keep, [&](int v) {
    for_each_vertex(g.neighbors(v) & keep, [&](int u) {
      if (u > v) h.add_edge(index[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(u)]);
    });
  });
  return h;
}

Graph delete_vertex(const Graph& g, int v) {
  check_vertex(g, v);
  return induced_subgraph(g, g.vertices() & ~bit(v));
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> rows(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    rows[static_cast<std::size_t>(v)] = ~g.neighbors(v) & g.vertices() & ~bit(v);
  }
  return Graph::from_rows(rows);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  check_order(a.order() + b.order());
  Graph g(a.order() + b.order());
  for (int v = 0; v < a.order(); ++v) {
    for_each_vertex(a.neighbors(v), [&](int u) { g.add_edge(v, u); });
  }
  const int shift = a.order();
  for (int v = 0; v < b.order(); ++v) {
    for_each_vertex(b.neighbors(v), [&](int u) { g.add_edge(v + shift, u + shift); });
  }
  return g;
}

Graph add_universal_vertices(const Graph& g, int count) {
  if (count < 0) throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  check_order(g.order() + count);
  Graph h = g;
  for (int i = 0; i < count; ++i) h = add_vertex(h, h.vertices());
  return h;
}

Graph add_vertex(const Graph& g, VertexSet nbrs) {
  const int n = g.order();
  check_order(n + 1);
  if ((nbrs & ~g.vertices()) != 0) throw Error(ErrorCode::kBadVertex, "neighborhood outside graph");
  std::vector<VertexSet> rows(g.rows().begin(), g.rows().end());
  for_each_vertex(nbrs, [&](int u) { rows[static_cast<std::size_t>(u)] |= bit(n); });
  rows.push_back(nbrs);
  return Graph::from_rows(rows);
}

Graph permute(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument, "permutation size mismatch");
  }
  std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    VertexSet row = 0;
    for_each_vertex(g.neighbors(v), [&](int u) { row |= bit(perm[static_cast<std::size_t>(u)]); });
    rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = row;
  }
  return Graph::from_rows(rows);
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet left = within & g.vertices();
  while (left != 0) {
    VertexSet comp = bit(lowest(left));
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
      next &= left & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::string to_adjacency_text(const Graph& g) {
  std::ostringstream os;
  for (int v = 0; v < g.order(); ++v) {
    os << v << ':';
    for_each_vertex(g.neighbors(v), [&](int u) { os << ' ' << u; });
    os << '\n';
  }
  return os.str();
}

}  // namespace critgen
