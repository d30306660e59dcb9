#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "critgen/graph.hpp"

namespace critgen {

/// color[v] in 1..k for every vertex.
using Coloring = std::vector<int>;

/// Bit c-1 set means color c is allowed.
using ColorSet = std::uint64_t;

inline constexpr int kMaxColors = 62;

constexpr ColorSet color_bit(int c) { return ColorSet{1} << (c - 1); }
constexpr ColorSet palette(int k) { return k == 0 ? 0 : (~ColorSet{0} >> (64 - k)); }

bool is_proper_coloring(const Graph& g, std::span<const int> coloring, int k);

/// Exhaustive-search bookkeeping: node count and an FNV-1a digest of every
/// (vertex, color) decision, so refutations are reproducible.
struct SearchTranscript {
  std::uint64_t nodes = 0;
  std::uint64_t digest = 0xcbf29ce484222325ULL;
};

struct ChromaticResult {
  int chi = 0;
  Coloring coloring;
};

ChromaticResult chromatic_number(const Graph& g);

std::optional<Coloring> is_k_colorable(const Graph& g, int k, SearchTranscript* transcript = nullptr);

/// A k-coloring of g - skip in which the vertices of `rainbow` carry all k
/// colors. Skipped vertices get color 0.
std::optional<Coloring> find_rainbow_coloring(const Graph& g, int k, VertexSet rainbow, VertexSet skip = 0);

/// Greedy lower bound: size of a clique found by max-degree descent.
int greedy_clique_bound(const Graph& g);

/// Per-vertex allowed subsets of the palette [k].
class ListAssignment {
 public:
  ListAssignment() = default;
  /// Every list is the full palette.
  ListAssignment(int n, int k);
  ListAssignment(int k, std::vector<ColorSet> lists);

  int palette_size() const { return k_; }
  int order() const { return static_cast<int>(lists_.size()); }
  ColorSet list(int v) const { return lists_[static_cast<std::size_t>(v)]; }
  void set_list(int v, ColorSet colors);
  void set_list(int v, std::initializer_list<int> colors);
  bool forced(int v) const { return popcount(list(v)) == 1; }
  bool has_empty_list() const;
  /// Unique color of a forced vertex.
  int forced_color(int v) const;

  std::string to_string() const;

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

 private:
  int k_ = 0;
  std::vector<ColorSet> lists_;
};

ColorSet make_color_set(std::initializer_list<int> colors);

/// Removes the color of the forced vertex v from every neighbor's list.
ListAssignment propagate_once(const Graph& g, const ListAssignment& lists, int v);

/// Worklist fixpoint of propagate_once starting at v. A vertex joins the
/// worklist when its list first becomes a singleton; each vertex propagates
/// at most once; the worklist is FIFO with neighbors enqueued by index.
ListAssignment propagate_exhaustive(const Graph& g, const ListAssignment& lists, int v);

/// Same fixpoint with the worklist drained in the caller's priority order
/// (smaller rank first). Used to exercise order independence.
ListAssignment propagate_exhaustive_ordered(const Graph& g, const ListAssignment& lists, int v,
                                            std::span<const int> rank);

std::optional<Coloring> solve_list_coloring(const Graph& g, const ListAssignment& lists);

bool is_list_coloring(const Graph& g, const ListAssignment& lists, std::span<const int> coloring);

}  // namespace critgen
