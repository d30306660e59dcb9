#include "critgen/catalog.hpp"

#include <charconv>
#include <sstream>

#include "critgen/error.hpp"

namespace critgen {

namespace {

// "0: 1 2 10 12; 1: ..." adjacency list in the House of Graphs style.
Graph from_adjacency_list(int n, std::string_view text) {
  Graph g(n);
  std::istringstream rows{std::string(text)};
  for (std::string row; std::getline(rows, row, ';');) {
    const auto colon = row.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::kInvalidArgument, "malformed adjacency row");
    const int v = std::stoi(row.substr(0, colon));
    std::istringstream nbrs(row.substr(colon + 1));
    for (int u; nbrs >> u;) {
      if (!g.adjacent(u, v)) g.add_edge(v, u);
    }
  }
  return g;
}

std::optional<int> parse_count(std::string_view digits) {
  int value = 0;
  if (digits.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
  return value;
}

}  // namespace

Graph path_graph(int t) {
  Graph g(t);
  for (int i = 0; i + 1 < t; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int s) {
  if (s < 3) throw Error(ErrorCode::kInvalidArgument, "cycle needs at least 3 vertices");
  Graph g = path_graph(s);
  g.add_edge(s - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph wheel_graph(int s) { return add_universal_vertices(cycle_graph(s), 1); }

Graph f_graph() { return add_vertex(cycle_graph(5), to_set({1, 2, 3, 4})); }

Graph antihole7() { return complement(cycle_graph(7)); }

Graph g1_graph() {
  return from_adjacency_list(
      13,
      "0: 1 2 10 12; 1: 0 8 10 12; 2: 0 9 10 12; 3: 4 5 11 12; 4: 3 6 11 12; 5: 3 7 11 12; "
      "6: 4 7 11 12; 7: 5 6 11 12; 8: 1 9 10 12; 9: 2 8 10 12; 10: 0 1 2 8 9 11; "
      "11: 3 4 5 6 7 10; 12: 0 1 2 3 4 5 6 7 8 9");
}

Graph g2_graph() {
  return from_adjacency_list(
      14,
      "0: 1 2 12 13; 1: 0 3 12 13; 2: 0 4 12 13; 3: 1 4 12 13; 4: 2 3 12 13; "
      "5: 6 7 9 11 12; 6: 5 8 10 11 13; 7: 5 8 9 11 13; 8: 6 7 10 11 12; 9: 5 7 10 12 13; "
      "10: 6 8 9 12 13; 11: 5 6 7 8 12 13; 12: 0 1 2 3 4 5 8 9 10 11; "
      "13: 0 1 2 3 4 6 7 9 10 11");
}

std::optional<Graph> lookup_named(std::string_view name) {
  if (name == "2P2") return disjoint_union(complete_graph(2), complete_graph(2));
  if (name == "P2+2P1") return disjoint_union(complete_graph(2), empty_graph(2));
  if (name == "P1+P3") return disjoint_union(empty_graph(1), path_graph(3));
  if (name == "P1+K3" || name == "co-claw") return disjoint_union(empty_graph(1), complete_graph(3));
  if (name == "diamond") return complement(disjoint_union(complete_graph(2), empty_graph(2)));
  if (name == "paw") return complement(disjoint_union(empty_graph(1), path_graph(3)));
  if (name == "claw") return complement(disjoint_union(empty_graph(1), complete_graph(3)));
  if (name == "F") return f_graph();
  if (name == "G1") return g1_graph();
  if (name == "G2") return g2_graph();

  if (name.size() >= 2) {
    const char head = name.front();
    std::string_view rest = name.substr(1);
    if (head == 'C' && rest.ends_with("bar")) {
      auto s = parse_count(rest.substr(0, rest.size() - 3));
      if (s && *s >= 3 && *s <= kMaxVertices) return complement(cycle_graph(*s));
      return std::nullopt;
    }
    if (auto t = parse_count(rest); t && *t >= 1 && *t <= kMaxVertices) {
      switch (head) {
        case 'P': return path_graph(*t);
        case 'K': return complete_graph(*t);
        case 'C':
          if (*t >= 3) return cycle_graph(*t);
          break;
        case 'W':
          if (*t >= 3 && *t < kMaxVertices) return wheel_graph(*t);
          break;
        default: break;
      }
    }
    if (name.ends_with("P1")) {
      auto r = parse_count(name.substr(0, name.size() - 2));
      if (r && *r >= 1 && *r <= kMaxVertices) return empty_graph(*r);
    }
  }
  return std::nullopt;
}

Graph named(std::string_view name) {
  if (auto g = lookup_named(name)) return *std::move(g);
  throw Error(ErrorCode::kUnknownName, "unknown graph name '" + std::string(name) + "'");
}

std::vector<std::string> fixed_catalog_names() {
  return {"2P2", "P2+2P1", "P1+P3", "P1+K3", "co-claw", "4P1", "diamond", "paw",
          "claw", "W5",  "F",      "C7bar", "G1",    "G2"};
}

}  // namespace critgen
