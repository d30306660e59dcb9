#include "critgen/generation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <mutex>
#include <span>
#include <sstream>
#include <thread>

#include "critgen/error.hpp"
#include "critgen/induced.hpp"

namespace critgen {

const char* rule_label(PruneRule rule) {
  switch (rule) {
    case PruneRule::kNotFree: return "R1_not_free";
    case PruneRule::kSeenBefore: return "R2_seen_before";
    case PruneRule::kDominatedPair: return "R3_dominated_pair";
    case PruneRule::kCliqueCutset: return "R4_clique_cutset";
    case PruneRule::kDominatedSubsets: return "R5_dominated_subsets";
    case PruneRule::kExtendableVertex: return "R6_extendable_vertex";
  }
  return "unknown";
}

const char* to_string(GenerationStatus status) {
  switch (status) {
    case GenerationStatus::kCompleted: return "completed";
    case GenerationStatus::kVertexCapHit: return "vertex_cap_hit";
    case GenerationStatus::kTimeCapHit: return "time_cap_hit";
  }
  return "unknown";
}

std::vector<Obstruction> list_obstructions(const Graph& g, int k, const PruneFlags& flags) {
  std::vector<Obstruction> out;
  if (flags.dominated_pair) {
    // N(v) within N(u): a critical supergraph has a vertex seeing v but not u
    for (const auto& [u, v] : all_dominated_pairs(g)) out.push_back({PruneRule::kDominatedPair, bit(v), bit(u)});
  }
  if (flags.clique_cutset) {
    if (auto cut = has_clique_cutset(g)) {
      for (VertexSet side : components(g, g.vertices() & ~*cut)) out.push_back({PruneRule::kCliqueCutset, side, 0});
    }
    // g itself is not critical here, so a connected critical supergraph has
    // a vertex outside g that sees g: the empty clique cannot separate them
    if (g.order() > 0) out.push_back({PruneRule::kCliqueCutset, g.vertices(), 0});
  }
  if (flags.dominated_subsets) {
    for (const auto& xy : all_dominated_subsets(g, flags.subset_max_size)) {
      out.push_back({PruneRule::kDominatedSubsets, xy.x, xy.y});
    }
  }
  if (flags.extendable_vertex && k >= 2) {
    // N(u) must see every color of some coloring of the supergraph minus u
    for (int u : extendable_vertices(g, k - 1)) out.push_back({PruneRule::kExtendableVertex, bit(u), 0});
  }
  return out;
}

std::optional<Obstruction> choose_obstruction(const Graph& g, int k, const PruneFlags& flags,
                                              std::span<const VertexSet> candidates) {
  std::optional<Obstruction> best;
  std::size_t best_count = 0;
  for (const Obstruction& o : list_obstructions(g, k, flags)) {
    const auto count = static_cast<std::size_t>(
        std::count_if(candidates.begin(), candidates.end(), [&](VertexSet n) { return o.repaired_by(n); }));
    if (!best || count < best_count) {
      best = o;
      best_count = count;
      if (count == 0) break;
    }
  }
  return best;
}

namespace {

bool extension_is_free(const Graph& ext, const std::vector<Graph>& forbidden) {
  const int added = ext.order() - 1;
  return std::none_of(forbidden.begin(), forbidden.end(), [&](const Graph& h) {
    return find_induced_through(ext, h, added).has_value();
  });
}

PruneVerdict judge(const Graph& ext, const std::optional<Obstruction>& obstruction,
                   const std::vector<Graph>& forbidden, const KeyStore& store) {
  PruneVerdict verdict;
  if (!extension_is_free(ext, forbidden)) {
    verdict.rejected_by = PruneRule::kNotFree;
    return verdict;
  }
  verdict.canon = canonical_form(ext);
  if (store.contains(verdict.canon->key)) {
    verdict.rejected_by = PruneRule::kSeenBefore;
    return verdict;
  }
  if (obstruction && !obstruction->repaired_by(ext.neighbors(ext.order() - 1))) {
    verdict.rejected_by = obstruction->rule;
  }
  return verdict;
}

}  // namespace

PruneVerdict prune(const Graph& parent, const Graph& extension, const GenerationConfig& cfg,
                   const KeyStore& store) {
  if (extension.order() != parent.order() + 1 ||
      induced_subgraph(extension, parent.vertices()) != parent) {
    throw Error(ErrorCode::kInvalidArgument, "not a 1-vertex extension of the parent");
  }
  const auto candidates = free_neighborhoods(parent, cfg.forbidden);
  return judge(extension, choose_obstruction(parent, cfg.k, cfg.prune, candidates), cfg.forbidden, store);
}

std::vector<Graph> one_vertex_extensions(const Graph& g) {
  if (g.order() >= kMaxVertices) throw Error(ErrorCode::kOversize, "graph already at vertex cap");
  std::vector<Graph> out;
  const VertexSet limit = bit(g.order());
  out.reserve(static_cast<std::size_t>(limit));
  for (VertexSet nbrs = 0; nbrs < limit; ++nbrs) out.push_back(add_vertex(g, nbrs));
  return out;
}

namespace {

class Generator {
 public:
  Generator(const GenerationConfig& cfg, const ExpansionObserver& observer)
      : cfg_(cfg), observer_(observer), start_(std::chrono::steady_clock::now()) {}

  GenerationReport run() {
    if (cfg_.k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
    if (cfg_.max_vertices < cfg_.seed.order() || cfg_.max_vertices > kMaxVertices) {
      throw Error(ErrorCode::kInvalidArgument, "max_vertices out of range");
    }
    if (!is_free(cfg_.seed, cfg_.forbidden)) {
      throw Error(ErrorCode::kSeedNotFree, "seed contains a forbidden induced subgraph");
    }
    CanonicalForm seed = canonical_form(cfg_.seed);
    store_.seen_before(seed.key);
    stack_.push_back({std::move(seed.graph), 0});

    const int workers = std::max(1, cfg_.worker_count);
    std::vector<std::thread> pool;
    for (int i = 1; i < workers; ++i) pool.emplace_back([this] { work(); });
    work();
    for (auto& t : pool) t.join();

    GenerationReport report;
    report.status = time_cap_hit_     ? GenerationStatus::kTimeCapHit
                    : vertex_cap_hit_ ? GenerationStatus::kVertexCapHit
                                      : GenerationStatus::kCompleted;
    std::sort(found_.begin(), found_.end(), [](const FoundGraph& a, const FoundGraph& b) { return a.key < b.key; });
    report.found = std::move(found_);
    report.stats.nodes_expanded = nodes_expanded_;
    report.stats.extensions_tried = extensions_tried_;
    report.stats.critical_checks = critical_checks_;
    for (std::size_t r = 0; r < kPruneRuleCount; ++r) report.stats.pruned[r] = pruned_[r];
    report.stats.max_order = max_order_;
    report.stats.expanded_by_order.assign(expanded_by_order_.begin(),
                                          expanded_by_order_.begin() + max_order_ + 1);
    return report;
  }

 private:
  struct Node {
    Graph graph;
    int depth;
  };

  bool out_of_time() {
    if (time_cap_hit_) return true;
    if (std::chrono::steady_clock::now() - start_ > cfg_.time_budget) time_cap_hit_ = true;
    return time_cap_hit_;
  }

  void work() {
    for (;;) {
      Node node;
      {
        std::unique_lock lock(mu_);
        cv_.wait(lock, [&] { return !stack_.empty() || active_ == 0 || time_cap_hit_; });
        if (time_cap_hit_ || stack_.empty()) {
          cv_.notify_all();
          return;
        }
        node = std::move(stack_.back());
        stack_.pop_back();
        ++active_;
      }
      process(node);
      {
        std::lock_guard lock(mu_);
        --active_;
      }
      cv_.notify_all();
    }
  }

  void process(const Node& node) {
    const Graph& g = node.graph;
    if (out_of_time()) return;
    if (!is_k_colorable(g, cfg_.k - 1)) {
      ++critical_checks_;
      if (auto cert = is_k_vertex_critical(g, cfg_.k)) {
        std::lock_guard lock(found_mu_);
        found_.push_back({canonical_key(g), g, *std::move(cert)});
      }
      return;
    }
    if (g.order() >= cfg_.max_vertices) {
      vertex_cap_hit_ = true;
      return;
    }
    expand(node);
  }

  void expand(const Node& node) {
    const Graph& g = node.graph;
    ++nodes_expanded_;
    {
      std::lock_guard lock(found_mu_);
      max_order_ = std::max(max_order_, g.order());
      ++expanded_by_order_[static_cast<std::size_t>(g.order())];
      if (observer_) observer_(g, node.depth);
    }
    const auto candidates = free_neighborhoods(g, cfg_.forbidden);
    pruned_[static_cast<std::size_t>(PruneRule::kNotFree)] += bit(g.order()) - candidates.size();
    extensions_tried_ += bit(g.order());
    const auto obstruction = choose_obstruction(g, cfg_.k, cfg_.prune, candidates);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if ((i & 0xff) == 0xff && out_of_time()) break;
      const VertexSet nbrs = candidates[i];
      if (obstruction && !obstruction->repaired_by(nbrs)) {
        ++pruned_[static_cast<std::size_t>(obstruction->rule)];
        continue;
      }
      CanonicalForm canon = canonical_form(add_vertex(g, nbrs));
      if (store_.seen_before(canon.key)) {
        ++pruned_[static_cast<std::size_t>(PruneRule::kSeenBefore)];
        continue;
      }
      {
        std::lock_guard lock(mu_);
        stack_.push_back({std::move(canon.graph), node.depth + 1});
      }
      cv_.notify_one();
    }
  }

  const GenerationConfig& cfg_;
  const ExpansionObserver& observer_;
  const std::chrono::steady_clock::time_point start_;
  KeyStore store_;

  std::mutex mu_;
  std::condition_variable cv_;
  std::vector<Node> stack_;
  int active_ = 0;

  std::mutex found_mu_;
  std::vector<FoundGraph> found_;
  int max_order_ = 0;
  std::array<std::uint64_t, kMaxVertices + 1> expanded_by_order_{};

  std::atomic<bool> time_cap_hit_{false};
  std::atomic<bool> vertex_cap_hit_{false};
  std::atomic<std::uint64_t> nodes_expanded_{0};
  std::atomic<std::uint64_t> extensions_tried_{0};
  std::atomic<std::uint64_t> critical_checks_{0};
  std::array<std::atomic<std::uint64_t>, kPruneRuleCount> pruned_{};
};

}  // namespace

std::string GenerationReport::to_text() const {
  std::ostringstream os;
  for (const auto& f : found) os << f.key.bytes << '\n';
  os << "count: " << found.size() << '\n';
  os << "status: " << to_string(status) << '\n';
  os << "nodes_expanded: " << stats.nodes_expanded << '\n';
  os << "extensions_tried: " << stats.extensions_tried << '\n';
  for (std::size_t r = 0; r < kPruneRuleCount; ++r) {
    os << "pruned_" << rule_label(static_cast<PruneRule>(r)) << ": " << stats.pruned[r] << '\n';
  }
  return os.str();
}

GenerationReport generate(const GenerationConfig& cfg, const ExpansionObserver& observer) {
  return Generator(cfg, observer).run();
}

}  // namespace critgen
