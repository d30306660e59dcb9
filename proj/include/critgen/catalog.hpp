#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "critgen/graph.hpp"

namespace critgen {

Graph path_graph(int t);
Graph cycle_graph(int s);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph wheel_graph(int s);

/// C5 on 0..4 plus vertex 5 adjacent to hole vertices 1..4.
Graph f_graph();
/// 7-antihole; vertex i is v_{i+1} and v_i v_{i+1} are the nonedges.
Graph antihole7();
Graph g1_graph();
Graph g2_graph();

/// Resolves a case-sensitive catalog name: Pt, Cs, Ks, Ws, Csbar, rP1,
/// 2P2, P2+2P1, P1+P3, P1+K3 (alias co-claw), diamond, paw, claw, F,
/// C7bar, G1, G2. Returns nullopt for unknown names.
std::optional<Graph> lookup_named(std::string_view name);

/// Same, throwing Error(kUnknownName).
Graph named(std::string_view name);

/// Fixed (non-parametric) names, for help output and tests.
std::vector<std::string> fixed_catalog_names();

}  // namespace critgen
