#pragma once

// Slow, obviously-correct reference implementations. They read graphs only
// through adjacent()/order() and share no code with the library's solvers.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "critgen/graph.hpp"

namespace oracle {

using critgen::Graph;
using Mask = std::uint64_t;

inline bool independent(const Graph& g, Mask s) {
  for (int u = 0; u < g.order(); ++u) {
    if (!((s >> u) & 1)) continue;
    for (int v = u + 1; v < g.order(); ++v) {
      if (((s >> v) & 1) && g.adjacent(u, v)) return false;
    }
  }
  return true;
}

// Chromatic number of g[within] by partitioning into independent sets:
// best[S] = 1 + min over independent I containing the lowest vertex of S.
inline int chi(const Graph& g, Mask within) {
  std::vector<int> idx;
  for (int v = 0; v < g.order(); ++v) {
    if ((within >> v) & 1) idx.push_back(v);
  }
  const int m = static_cast<int>(idx.size());
  const Mask full = (Mask{1} << m) - 1;
  std::vector<char> indep(full + 1, 0);
  for (Mask s = 0; s <= full; ++s) {
    Mask real = 0;
    for (int i = 0; i < m; ++i) {
      if ((s >> i) & 1) real |= Mask{1} << idx[static_cast<std::size_t>(i)];
    }
    indep[s] = independent(g, real);
  }
  std::vector<int> best(full + 1, m + 1);
  best[0] = 0;
  for (Mask s = 1; s <= full; ++s) {
    const Mask low = s & (~s + 1);
    const Mask rest = s & ~low;
    // subsets of rest, each joined with low
    for (Mask t = rest;; t = (t - 1) & rest) {
      if (indep[t | low]) best[s] = std::min(best[s], best[s & ~(t | low)] + 1);
      if (t == 0) break;
    }
  }
  return best[full];
}

inline int chi(const Graph& g) { return chi(g, g.order() == 0 ? 0 : (~Mask{0} >> (64 - g.order()))); }

inline Mask all_of(const Graph& g) { return g.order() == 0 ? 0 : (~Mask{0} >> (64 - g.order())); }

inline bool critical(const Graph& g, int k) {
  if (chi(g) != k) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (chi(g, all_of(g) & ~(Mask{1} << v)) > k - 1) return false;
  }
  return true;
}

// Upper triangle read row by row, lexicographically smallest over all
// vertex orders. Only for small n.
inline std::string perm_canonical(const Graph& g) {
  const int n = g.order();
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::string best;
  do {
    std::string s;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) s += g.adjacent(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]) ? '1' : '0';
    }
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::to_string(n) + ":" + best;
}

// Whether some injective map of h into g preserves adjacency and
// non-adjacency.
inline bool has_induced(const Graph& g, const Graph& h) {
  const int n = g.order();
  const int m = h.order();
  if (m > n) return false;
  std::vector<int> image;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto extend = [&](auto&& self) -> bool {
    const int i = static_cast<int>(image.size());
    if (i == m) return true;
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = g.adjacent(v, image[static_cast<std::size_t>(j)]) == h.adjacent(i, j);
      if (!ok) continue;
      used[static_cast<std::size_t>(v)] = 1;
      image.push_back(v);
      if (self(self)) return true;
      image.pop_back();
      used[static_cast<std::size_t>(v)] = 0;
    }
    return false;
  };
  return extend(extend);
}

inline bool is_free(const Graph& g, const std::vector<Graph>& forbidden) {
  return std::none_of(forbidden.begin(), forbidden.end(), [&](const Graph& h) { return has_induced(g, h); });
}

inline int component_count(const Graph& g, Mask within) {
  int count = 0;
  Mask left = within;
  while (left != 0) {
    Mask frontier = left & (~left + 1);
    Mask seen = frontier;
    while (frontier != 0) {
      Mask next = 0;
      for (int v = 0; v < g.order(); ++v) {
        if (!((frontier >> v) & 1)) continue;
        for (int u = 0; u < g.order(); ++u) {
          if (((left >> u) & 1) && !((seen >> u) & 1) && g.adjacent(u, v)) next |= Mask{1} << u;
        }
      }
      seen |= next;
      frontier = next;
    }
    left &= ~seen;
    ++count;
  }
  return count;
}

inline bool is_clique(const Graph& g, Mask s) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (((s >> u) & 1) && ((s >> v) & 1) && !g.adjacent(u, v)) return false;
    }
  }
  return true;
}

// Some clique (possibly empty) whose removal leaves at least two components.
inline bool has_clique_cutset(const Graph& g) {
  const Mask all = all_of(g);
  for (Mask k = 0; k <= all; ++k) {
    if ((k & ~all) != 0 || !is_clique(g, k)) continue;
    if (component_count(g, all & ~k) >= 2) return true;
  }
  return false;
}

inline Mask nbhd(const Graph& g, Mask x) {
  Mask out = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (!((x >> v) & 1)) continue;
    for (int u = 0; u < g.order(); ++u) {
      if (g.adjacent(u, v)) out |= Mask{1} << u;
    }
  }
  return out & ~x;
}

// Disjoint nonempty X, Y of size <= max_size, X anticomplete to Y,
// chi(X) <= chi(Y), Y complete to N(X).
inline bool has_dominated_subsets(const Graph& g, int max_size) {
  const Mask all = all_of(g);
  for (Mask x = 1; x <= all; ++x) {
    if (std::popcount(x) > max_size) continue;
    const Mask nx = nbhd(g, x);
    for (Mask y = 1; y <= all; ++y) {
      if ((x & y) != 0 || std::popcount(y) > max_size) continue;
      if ((nx & y) != 0) continue;
      bool complete = true;
      for (int a = 0; a < g.order() && complete; ++a) {
        if (!((y >> a) & 1)) continue;
        for (int b = 0; b < g.order() && complete; ++b) {
          if (((nx >> b) & 1) && !g.adjacent(a, b)) complete = false;
        }
      }
      if (complete && chi(g, x) <= chi(g, y)) return true;
    }
  }
  return false;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

// The graph whose upper triangle, read row by row, is the bits of code.
inline Graph labeled_graph(int n, std::uint64_t code) {
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if ((code >> bit++) & 1) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace oracle
