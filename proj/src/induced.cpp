#include "critgen/induced.hpp"

#include <algorithm>
#include <functional>

namespace critgen {

namespace {

class InducedSearch {
 public:
  InducedSearch(const Graph& g, const Graph& h, VertexSet within)
      : g_(g), h_(h), within_(within & g.vertices()), image_(static_cast<std::size_t>(h.order()), -1) {}

  /// Visits every induced copy; the visitor returns true to stop early.
  void visit_all(const std::function<bool(const Embedding&)>& visitor) {
    visitor_ = &visitor;
    run(-1, -1);
  }

  // Pattern vertex `first` (if >= 0) is placed on host vertex `first_image`.
  std::optional<Embedding> run(int first, int first_image) {
    const int k = h_.order();
    if (k == 0) {
      if (visitor_ != nullptr) (*visitor_)(image_);
      return Embedding{};
    }
    if (k > popcount(within_)) return std::nullopt;
    build_order(first);
    if (first >= 0) {
      if (!contains(within_, first_image) || g_.degree(first_image) < h_.degree(first)) return std::nullopt;
      image_[static_cast<std::size_t>(first)] = first_image;
      if (extend(1, bit(first_image))) return image_;
      return std::nullopt;
    }
    if (extend(0, 0)) return image_;
    return std::nullopt;
  }

 private:
  // Each next pattern vertex maximizes links to those already placed, so
  // candidate masks shrink early.
  void build_order(int first) {
    const int k = h_.order();
    order_.clear();
    VertexSet placed = 0;
    if (first >= 0) {
      order_.push_back(first);
      placed |= bit(first);
    }
    while (static_cast<int>(order_.size()) < k) {
      int best = -1;
      int best_links = -1;
      int best_deg = -1;
      for (int u = 0; u < k; ++u) {
        if (contains(placed, u)) continue;
        const int links = popcount(h_.neighbors(u) & placed);
        const int deg = h_.degree(u);
        if (links > best_links || (links == best_links && deg > best_deg)) {
          best = u;
          best_links = links;
          best_deg = deg;
        }
      }
      order_.push_back(best);
      placed |= bit(best);
    }
  }

  bool extend(std::size_t depth, VertexSet used) {
    if (depth == order_.size()) return visitor_ == nullptr || (*visitor_)(image_);
    const int u = order_[depth];
    VertexSet cand = within_ & ~used;
    for (std::size_t i = 0; i < depth; ++i) {
      const int w = order_[i];
      const VertexSet nw = g_.neighbors(image_[static_cast<std::size_t>(w)]);
      cand &= h_.adjacent(u, w) ? nw : ~nw;
    }
    const int need = h_.degree(u);
    while (cand != 0) {
      const int x = lowest(cand);
      cand &= cand - 1;
      if (popcount(g_.neighbors(x) & within_) < need) continue;
      image_[static_cast<std::size_t>(u)] = x;
      if (extend(depth + 1, used | bit(x))) return true;
    }
    image_[static_cast<std::size_t>(u)] = -1;
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  VertexSet within_;
  std::vector<int> order_;
  Embedding image_;
  const std::function<bool(const Embedding&)>* visitor_ = nullptr;
};

}  // namespace

bool is_induced_embedding(const Graph& g, const Graph& h, std::span<const int> image) {
  if (static_cast<int>(image.size()) != h.order()) return false;
  VertexSet seen = 0;
  for (int x : image) {
    if (x < 0 || x >= g.order() || contains(seen, x)) return false;
    seen |= bit(x);
  }
  for (int u = 0; u < h.order(); ++u) {
    for (int v = u + 1; v < h.order(); ++v) {
      if (h.adjacent(u, v) != g.adjacent(image[static_cast<std::size_t>(u)], image[static_cast<std::size_t>(v)])) {
        return false;
      }
    }
  }
  return true;
}

std::optional<Embedding> find_induced(const Graph& g, const Graph& h) {
  return find_induced_within(g, h, g.vertices());
}

std::optional<Embedding> find_induced_within(const Graph& g, const Graph& h, VertexSet within) {
  return InducedSearch(g, h, within).run(-1, -1);
}

std::optional<Embedding> find_induced_through(const Graph& g, const Graph& h, int anchor) {
  for (int u = 0; u < h.order(); ++u) {
    if (auto e = InducedSearch(g, h, g.vertices()).run(u, anchor)) return e;
  }
  return std::nullopt;
}

void for_each_induced(const Graph& g, const Graph& h, const std::function<bool(const Embedding&)>& visitor) {
  InducedSearch(g, h, g.vertices()).visit_all(visitor);
}

bool is_free(const Graph& g, std::span<const Graph> forbidden) {
  return std::none_of(forbidden.begin(), forbidden.end(),
                      [&](const Graph& h) { return find_induced(g, h).has_value(); });
}

FreeNeighborhoods::FreeNeighborhoods(const Graph& g, const std::vector<Graph>& forbidden)
    : order_(g.order()), by_lowest_(static_cast<std::size_t>(g.order())) {
  std::vector<Trace> traces;
  for (const Graph& h : forbidden) {
    for (int x = 0; x < h.order(); ++x) {
      // x played by the new vertex: its trace on a copy of h - x is fixed
      const Graph rest = delete_vertex(h, x);
      std::vector<int> nbrs;
      for_each_vertex(h.neighbors(x), [&](int y) { nbrs.push_back(y < x ? y : y - 1); });
      for_each_induced(g, rest, [&](const Embedding& e) {
        Trace t{to_set(e), 0};
        for (int y : nbrs) t.pattern |= bit(e[static_cast<std::size_t>(y)]);
        traces.push_back(t);
        return false;
      });
    }
  }
  std::sort(traces.begin(), traces.end());
  traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
  for (const Trace& t : traces) {
    if (t.support == 0) {
      hopeless_ = true;
      continue;
    }
    by_lowest_[static_cast<std::size_t>(lowest(t.support))].push_back(t);
  }
}

void FreeNeighborhoods::visit(const std::function<void(VertexSet)>& visitor) const {
  if (hopeless_) return;
  // highest vertex decided first, absent before present: increasing bitset order
  auto descend = [&](auto&& self, int v, VertexSet nbrs) -> void {
    if (v < 0) {
      visitor(nbrs);
      return;
    }
    for (const VertexSet choice : {VertexSet{0}, bit(v)}) {
      const VertexSet next = nbrs | choice;
      const auto& due = by_lowest_[static_cast<std::size_t>(v)];
      const bool ok = std::none_of(due.begin(), due.end(),
                                   [&](const Trace& t) { return (next & t.support) == t.pattern; });
      if (ok) self(self, v - 1, next);
    }
  };
  descend(descend, order_ - 1, 0);
}

std::vector<VertexSet> free_neighborhoods(const Graph& g, const std::vector<Graph>& forbidden) {
  std::vector<VertexSet> out;
  FreeNeighborhoods(g, forbidden).visit([&](VertexSet n) { out.push_back(n); });
  return out;
}

}  // namespace critgen
