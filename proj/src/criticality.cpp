#include "critgen/criticality.hpp"

#include <algorithm>
#include <sstream>

#include "critgen/error.hpp"

namespace critgen {

std::string CriticalityCertificate::to_text() const {
  std::ostringstream os;
  os << "k: " << k << '\n';
  for (std::size_t v = 0; v < per_vertex.size(); ++v) {
    os << v << ':';
    for (int c : per_vertex[v]) os << ' ' << c;
    os << '\n';
  }
  return os.str();
}

std::optional<CriticalityCertificate> is_k_vertex_critical(const Graph& g, int k) {
  if (k < 1 || k > kMaxColors) return std::nullopt;
  CriticalityCertificate cert;
  cert.k = k;
  if (is_k_colorable(g, k - 1, &cert.refutation)) return std::nullopt;
  if (!is_k_colorable(g, k)) return std::nullopt;
  cert.per_vertex.reserve(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    auto c = is_k_colorable(delete_vertex(g, v), k - 1);
    if (!c) return std::nullopt;
    cert.per_vertex.push_back(*std::move(c));
  }
  return cert;
}

std::string criticality_failure(const Graph& g, int k) {
  if (k < 1) return "k must be positive";
  const int chi = chromatic_number(g).chi;
  if (chi != k) return "chi is " + std::to_string(chi);
  for (int v = 0; v < g.order(); ++v) {
    if (!is_k_colorable(delete_vertex(g, v), k - 1)) {
      return "G-" + std::to_string(v) + " is not " + std::to_string(k - 1) + "-colorable";
    }
  }
  return {};
}

bool verify_certificate(const Graph& g, const CriticalityCertificate& cert) {
  if (cert.k < 1 || static_cast<int>(cert.per_vertex.size()) != g.order()) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (!is_proper_coloring(delete_vertex(g, v), cert.per_vertex[static_cast<std::size_t>(v)], cert.k - 1)) {
      return false;
    }
  }
  return chromatic_number(g).chi == cert.k;
}

namespace {

// Cliques of exactly `size` vertices in lexicographic order; stops when f
// returns true.
template <typename F>
bool for_each_clique(const Graph& g, int size, VertexSet clique, VertexSet cand, F&& f) {
  if (popcount(clique) == size) return f(clique);
  while (cand != 0) {
    const int v = lowest(cand);
    cand &= cand - 1;
    if (for_each_clique(g, size, clique | bit(v), cand & g.neighbors(v), f)) return true;
  }
  return false;
}

}  // namespace

std::optional<VertexSet> has_clique_cutset(const Graph& g) {
  const auto comps = components(g);
  if (comps.size() >= 2) return VertexSet{0};
  if (comps.empty()) return std::nullopt;
  const VertexSet all = g.vertices();
  std::optional<VertexSet> found;
  for (int size = 1; size < g.order() && !found; ++size) {
    for_each_clique(g, size, 0, all, [&](VertexSet k) {
      if (components(g, all & ~k).size() > 1) {
        found = k;
        return true;
      }
      return false;
    });
  }
  return found;
}

std::vector<std::pair<int, int>> all_dominated_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) {
      if (u == v || g.adjacent(u, v)) continue;
      if ((g.neighbors(v) & ~g.neighbors(u)) == 0) out.emplace_back(u, v);
    }
  }
  return out;
}

std::optional<std::pair<int, int>> find_dominated_pair(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) {
      if (u == v || g.adjacent(u, v)) continue;
      if ((g.neighbors(v) & ~g.neighbors(u)) == 0) return std::pair{u, v};
    }
  }
  return std::nullopt;
}

std::vector<int> extendable_vertices(const Graph& g, int colors) {
  std::vector<int> out;
  for (int u = 0; u < g.order(); ++u) {
    if (g.degree(u) < colors || !find_rainbow_coloring(g, colors, g.neighbors(u), bit(u))) out.push_back(u);
  }
  return out;
}

std::optional<int> find_extendable_vertex(const Graph& g, int colors) {
  for (int u = 0; u < g.order(); ++u) {
    if (g.degree(u) < colors) return u;
  }
  for (int u = 0; u < g.order(); ++u) {
    if (!find_rainbow_coloring(g, colors, g.neighbors(u), bit(u))) return u;
  }
  return std::nullopt;
}

namespace {

// Visits qualifying (X, Y) in scan order until f returns true.
template <typename F>
void scan_dominated_subsets(const Graph& g, int max_size, F&& f) {
  if (max_size < 1) throw Error(ErrorCode::kInvalidArgument, "max_size must be positive");
  const int n = g.order();

  struct Subset {
    VertexSet set;
    int chi;
  };
  std::vector<Subset> subsets;
  std::vector<int> current;
  auto enumerate = [&](auto&& self, int next) -> void {
    if (!current.empty()) {
      const VertexSet s = to_set(current);
      subsets.push_back({s, chromatic_number(induced_subgraph(g, s)).chi});
    }
    if (static_cast<int>(current.size()) == max_size) return;
    for (int v = next; v < n; ++v) {
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
    }
  };
  enumerate(enumerate, 0);
  // depth-first emission is already lexicographic on sorted member lists
  for (const Subset& x : subsets) {
    const VertexSet nx = g.neighbors_of_set(x.set);
    VertexSet pool = g.vertices() & ~x.set & ~nx;
    for_each_vertex(nx, [&](int w) { pool &= g.neighbors(w); });
    if (pool == 0) continue;
    for (const Subset& y : subsets) {
      if ((y.set & ~pool) != 0) continue;
      if (x.chi <= y.chi && f(DominatedSubsets{x.set, y.set})) return;
    }
  }
}

}  // namespace

std::optional<DominatedSubsets> find_dominated_subsets(const Graph& g, int max_size) {
  std::optional<DominatedSubsets> found;
  scan_dominated_subsets(g, max_size, [&](const DominatedSubsets& xy) {
    found = xy;
    return true;
  });
  return found;
}

std::vector<DominatedSubsets> all_dominated_subsets(const Graph& g, int max_size) {
  std::vector<DominatedSubsets> out;
  scan_dominated_subsets(g, max_size, [&](const DominatedSubsets& xy) {
    out.push_back(xy);
    return false;
  });
  return out;
}

}  // namespace critgen
