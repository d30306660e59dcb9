#include "critgen/canon.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "critgen/graph6.hpp"

namespace critgen {

namespace {

using Partition = std::vector<VertexSet>;

// Splits every cell by neighbor counts into each splitter cell until the
// partition is equitable. Sub-cells are ordered by count, so the result
// depends only on the isomorphism type of (graph, partition).
void refine(const Graph& g, Partition& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      const VertexSet splitter = cells[s];
      for (std::size_t i = 0; i < cells.size(); ++i) {
        const VertexSet cell = cells[i];
        if (popcount(cell) == 1) continue;
        // counts are at most 62
        std::array<VertexSet, kMaxVertices + 1> by_count{};
        int lo = kMaxVertices;
        int hi = 0;
        for_each_vertex(cell, [&](int v) {
          const int c = popcount(g.neighbors(v) & splitter);
          by_count[static_cast<std::size_t>(c)] |= bit(v);
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        });
        if (lo == hi) continue;
        Partition pieces;
        for (int c = lo; c <= hi; ++c) {
          if (by_count[static_cast<std::size_t>(c)]) pieces.push_back(by_count[static_cast<std::size_t>(c)]);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(i));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(i), pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
  std::vector<int> parent;
};

class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalForm run() {
    Partition root;
    if (n_ > 0) root.push_back(g_.vertices());
    refine(g_, root);
    std::vector<int> path;
    search(root, path);

    CanonicalForm out;
    out.labeling = best_labeling_;
    out.graph = Graph::from_rows(best_rows_);
    out.key.bytes = emit_graph6(out.graph);
    return out;
  }

 private:
  std::vector<VertexSet> relabeled_rows(const std::vector<int>& lab) const {
    std::vector<VertexSet> rows(static_cast<std::size_t>(n_), 0);
    for (int v = 0; v < n_; ++v) {
      VertexSet row = 0;
      for_each_vertex(g_.neighbors(v), [&](int u) { row |= bit(lab[static_cast<std::size_t>(u)]); });
      rows[static_cast<std::size_t>(lab[static_cast<std::size_t>(v)])] = row;
    }
    return rows;
  }

  // Automorphism mapping the vertex labeled i in `from` to the vertex labeled
  // i in `to`.
  std::vector<int> automorphism(const std::vector<int>& from, const std::vector<int>& to) const {
    std::vector<int> inv_to(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) inv_to[static_cast<std::size_t>(to[static_cast<std::size_t>(v)])] = v;
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      gamma[static_cast<std::size_t>(v)] = inv_to[static_cast<std::size_t>(from[static_cast<std::size_t>(v)])];
    }
    return gamma;
  }

  void leaf(const Partition& cells) {
    std::vector<int> lab(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < cells.size(); ++i) lab[static_cast<std::size_t>(lowest(cells[i]))] = static_cast<int>(i);
    std::vector<VertexSet> rows = relabeled_rows(lab);
    if (!have_leaf_) {
      have_leaf_ = true;
      first_labeling_ = lab;
      first_rows_ = rows;
      best_labeling_ = lab;
      best_rows_ = std::move(rows);
      return;
    }
    if (rows == first_rows_) {
      generators_.push_back(automorphism(lab, first_labeling_));
    } else if (rows == best_rows_) {
      generators_.push_back(automorphism(lab, best_labeling_));
    } else if (rows < best_rows_) {
      best_labeling_ = std::move(lab);
      best_rows_ = std::move(rows);
    }
  }

  bool fixes(const std::vector<int>& gamma, const std::vector<int>& path) const {
    return std::all_of(path.begin(), path.end(),
                       [&](int v) { return gamma[static_cast<std::size_t>(v)] == v; });
  }

  void search(const Partition& cells, std::vector<int>& path) {
    auto target = std::find_if(cells.begin(), cells.end(), [](VertexSet c) { return popcount(c) > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const auto pos = static_cast<std::size_t>(target - cells.begin());
    const VertexSet cell = *target;
    std::vector<int> explored;
    for_each_vertex(cell, [&](int v) {
      if (!explored.empty()) {
        UnionFind orbits(n_);
        for (const auto& gamma : generators_) {
          if (!fixes(gamma, path)) continue;
          for (int x = 0; x < n_; ++x) orbits.unite(x, gamma[static_cast<std::size_t>(x)]);
        }
        const int root = orbits.find(v);
        if (std::any_of(explored.begin(), explored.end(), [&](int u) { return orbits.find(u) == root; })) {
          return;
        }
      }
      explored.push_back(v);
      Partition child = cells;
      child[pos] = bit(v);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(pos) + 1, cell & ~bit(v));
      refine(g_, child);
      path.push_back(v);
      search(child, path);
      path.pop_back();
    });
  }

  const Graph& g_;
  int n_;
  bool have_leaf_ = false;
  std::vector<int> first_labeling_;
  std::vector<VertexSet> first_rows_;
  std::vector<int> best_labeling_;
  std::vector<VertexSet> best_rows_;
  std::vector<std::vector<int>> generators_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() == 0) return {CanonicalKey{emit_graph6(g)}, g, {}};
  return Canonicalizer(g).run();
}

CanonicalKey canonical_key(const Graph& g) { return canonical_form(g).key; }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_key(a) == canonical_key(b);
}

KeyStore::Shard& KeyStore::shard_for(const std::string& bytes) const {
  return shards_[std::hash<std::string>{}(bytes) % kShards];
}

bool KeyStore::seen_before(const CanonicalKey& key) {
  Shard& s = shard_for(key.bytes);
  std::lock_guard lock(s.mu);
  return !s.keys.insert(key.bytes).second;
}

bool KeyStore::contains(const CanonicalKey& key) const {
  Shard& s = shard_for(key.bytes);
  std::lock_guard lock(s.mu);
  return s.keys.count(key.bytes) > 0;
}

std::size_t KeyStore::size() const {
  std::size_t total = 0;
  for (auto& s : shards_) {
    std::lock_guard lock(s.mu);
    total += s.keys.size();
  }
  return total;
}

}  // namespace critgen
