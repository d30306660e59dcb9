#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "critgen/coloring.hpp"
#include "critgen/error.hpp"
#include "critgen/graph.hpp"

namespace critgen {

/// A forbidden induced subgraph located in a host graph. `vertices` lists
/// host vertices in the order the argument that produced them names them;
/// `pattern` is a catalog name.
struct Witness {
  std::string pattern;
  std::vector<int> vertices;

  std::string to_text() const;
};

/// True when the listed vertices induce a copy of the named pattern.
bool verify_witness(const Graph& g, const Witness& w);

/// Error that carries the offending vertex (if any) and a witness.
class StructureError : public Error {
 public:
  StructureError(ErrorCode code, const std::string& what, std::optional<Witness> witness, int vertex = -1)
      : Error(code, what), witness_(std::move(witness)), vertex_(vertex) {}

  const std::optional<Witness>& witness() const noexcept { return witness_; }
  int vertex() const noexcept { return vertex_; }

 private:
  std::optional<Witness> witness_;
  int vertex_;
};

// Index arithmetic below is 1-based and cyclic: slot i of a 5-array holds
// the set for index i+1.

struct C5Context {
  std::array<int, 5> cycle{};  // cycle[i-1] is v_i
  VertexSet z = 0;
  std::array<VertexSet, 5> r{};
  std::array<VertexSet, 5> y{};
  /// Vertices matching none of the definitions; empty after classify_c5.
  VertexSet unclassified = 0;

  int v(int i) const { return cycle[static_cast<std::size_t>(((i - 1) % 5 + 5) % 5)]; }
  VertexSet r_set(int i) const { return r[static_cast<std::size_t>(((i - 1) % 5 + 5) % 5)]; }
  VertexSet y_set(int i) const { return y[static_cast<std::size_t>(((i - 1) % 5 + 5) % 5)]; }
};

/// Splits V - C by neighborhood on the cycle without judging membership.
/// Throws kNotACycle unless `cycle` lists an induced C5 in cyclic order.
C5Context partition_c5(const Graph& g, std::span<const int> cycle);

/// Checks g is (P5, diamond)-free first (kNotInClass with witness), then
/// partitions; a vertex outside every set raises kTaxonomyViolation.
C5Context classify_c5(const Graph& g, std::span<const int> cycle);

struct ClaimVerdict {
  std::string name;
  bool holds = true;
  /// Criticality-only bounds: reported but never counted as failures.
  bool informational = false;
  std::optional<Witness> witness;
  std::string detail;
};

struct ClaimReport {
  std::vector<ClaimVerdict> claims;

  /// No required claim failed.
  bool ok() const;
  /// "<name>: PASS" or "<name>: FAIL <vertices> <pattern>" per claim.
  std::string to_text() const;
};

ClaimReport check_c5_claims(const C5Context& ctx, const Graph& g);

struct Antihole7Context {
  std::array<int, 7> antihole{};  // antihole[i-1] is v_i; v_i v_{i+1} are nonedges
  std::array<VertexSet, 7> t{};
  std::array<VertexSet, 7> f{};
  /// No neighbor on the antihole.
  VertexSet z = 0;
  VertexSet unclassified = 0;

  int v(int i) const { return antihole[static_cast<std::size_t>(((i - 1) % 7 + 7) % 7)]; }
  VertexSet t_set(int i) const { return t[static_cast<std::size_t>(((i - 1) % 7 + 7) % 7)]; }
  VertexSet f_set(int i) const { return f[static_cast<std::size_t>(((i - 1) % 7 + 7) % 7)]; }
};

/// Throws kNotAnAntihole unless `antihole` lists an induced 7-antihole
/// whose nonedges are consecutive pairs.
Antihole7Context partition_antihole7(const Graph& g, std::span<const int> antihole);

/// Taxonomy first: a vertex outside every T_i / F_i raises
/// kTaxonomyViolation with the witness from the case analysis, then g is
/// checked against P5, K4, W5, F (kNotInClass). Vertices with no antihole
/// neighbor are allowed only in components that avoid the antihole; they
/// stay in `z`.
Antihole7Context classify_antihole7(const Graph& g, std::span<const int> antihole);

ClaimReport check_antihole7_claims(const Antihole7Context& ctx, const Graph& g);

/// Intermediate state of the constructive 4-coloring, in proof notation.
struct AntiholeColoringTrace {
  /// Lists after propagating once from each antihole vertex.
  ListAssignment first_step;
  /// Named sets such as "T'7", "F''2".
  std::vector<std::pair<std::string, VertexSet>> sets;

  std::string to_text() const;
};

/// Proper 4-coloring of a (P5, K4, W5, F)-free graph that contains the given
/// 7-antihole, built the way the antihole lemma's proof builds it. Components
/// that avoid the antihole are colored by exact search.
Coloring four_color_via_antihole(const Graph& g, std::span<const int> antihole,
                                 AntiholeColoringTrace* trace = nullptr);

/// Grows `core` one vertex at a time up to `order` vertices, each time
/// picking uniformly among the nonempty neighborhoods that keep the graph
/// free of `forbidden`. Core vertices keep their labels.
Graph sample_class_member(const Graph& core, const std::vector<Graph>& forbidden, int order,
                          std::mt19937_64& rng);

}  // namespace critgen
