#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "critgen/canon.hpp"
#include "critgen/criticality.hpp"
#include "critgen/graph.hpp"

namespace critgen {

enum class PruneRule : int {
  kNotFree = 0,          // R1
  kSeenBefore = 1,       // R2
  kDominatedPair = 2,    // R3
  kCliqueCutset = 3,     // R4
  kDominatedSubsets = 4, // R5
  kExtendableVertex = 5, // every (k-1)-coloring of G-u extends to u
};

inline constexpr std::size_t kPruneRuleCount = 6;

const char* rule_label(PruneRule rule);

struct PruneFlags {
  bool dominated_pair = true;
  bool clique_cutset = true;
  bool dominated_subsets = true;
  bool extendable_vertex = true;
  int subset_max_size = 2;
};

struct GenerationConfig {
  int k = 0;
  std::vector<Graph> forbidden;
  Graph seed;
  int max_vertices = 32;
  std::chrono::milliseconds time_budget{600'000};
  int worker_count = 1;
  PruneFlags prune;
};

/// A structure in the parent that every critical supergraph must repair.
/// The new vertex's neighborhood N must meet `touch` and, when `miss` is
/// nonempty, must not contain all of `miss`.
struct Obstruction {
  PruneRule rule = PruneRule::kDominatedPair;
  VertexSet touch = 0;
  VertexSet miss = 0;

  bool repaired_by(VertexSet nbrs) const {
    return (nbrs & touch) != 0 && (miss == 0 || (miss & ~nbrs) != 0);
  }
};

/// Every enabled obstruction of g: all dominated pairs, the sides of the
/// first clique cutset, all bounded dominated subsets, all extendable
/// vertices, in that order.
std::vector<Obstruction> list_obstructions(const Graph& g, int k, const PruneFlags& flags);

/// The obstruction repaired by the fewest of `candidates`; earliest listed
/// wins ties. Any single one is a sound filter.
std::optional<Obstruction> choose_obstruction(const Graph& g, int k, const PruneFlags& flags,
                                              std::span<const VertexSet> candidates);

struct PruneVerdict {
  std::optional<PruneRule> rejected_by;
  /// Filled once R2 was evaluated.
  std::optional<CanonicalForm> canon;

  bool keep() const { return !rejected_by.has_value(); }
};

/// Judges one 1-vertex extension (new vertex = last index) of `parent` in
/// rule order R1, R2 (lookup only), then the parent's obstruction.
PruneVerdict prune(const Graph& parent, const Graph& extension, const GenerationConfig& cfg,
                   const KeyStore& store);

/// Every g + one vertex, neighborhoods in increasing bitset order.
std::vector<Graph> one_vertex_extensions(const Graph& g);

enum class GenerationStatus { kCompleted, kVertexCapHit, kTimeCapHit };

const char* to_string(GenerationStatus status);

struct FoundGraph {
  CanonicalKey key;
  Graph graph;
  CriticalityCertificate certificate;
};

struct GenerationStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t extensions_tried = 0;
  std::uint64_t critical_checks = 0;
  std::array<std::uint64_t, kPruneRuleCount> pruned{};
  int max_order = 0;
  /// Histogram of expanded nodes by order.
  std::vector<std::uint64_t> expanded_by_order;
};

struct GenerationReport {
  GenerationStatus status = GenerationStatus::kCompleted;
  std::vector<FoundGraph> found;  // sorted by key
  GenerationStats stats;

  /// Sorted canonical graph6 lines then the summary block.
  std::string to_text() const;
};

/// Called once per expanded node with its canonical graph and its depth
/// below the seed. Calls are serialized.
using ExpansionObserver = std::function<void(const Graph&, int depth)>;

GenerationReport generate(const GenerationConfig& cfg, const ExpansionObserver& observer = {});

}  // namespace critgen
