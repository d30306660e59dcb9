#include <random>

#include "critgen/canon.hpp"
#include "critgen/catalog.hpp"
#include "critgen/coloring.hpp"
#include "critgen/graph.hpp"
#include "critgen/graph6.hpp"
#include "critgen/induced.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

using namespace critgen;

namespace {

// Independent decoder straight from the format description.
Graph decode_by_hand(const std::string& s) {
  const int n = s[0] - 63;
  std::vector<int> bits;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const int x = s[i] - 63;
    for (int b = 5; b >= 0; --b) bits.push_back((x >> b) & 1);
  }
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bits[k++]) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace

TEST_SUITE("graph_core") {
  TEST_CASE("graph6 fixed strings") {
    CHECK(parse_graph6("@") == empty_graph(1));
    CHECK(parse_graph6("A_") == complete_graph(2));
    CHECK(parse_graph6("Dhc") == cycle_graph(5));
    CHECK(emit_graph6(empty_graph(1)) == "@");
    CHECK(emit_graph6(complete_graph(2)) == "A_");
    CHECK(emit_graph6(cycle_graph(5)) == "Dhc");
    CHECK(decode_by_hand("Dhc") == cycle_graph(5));
    CHECK(parse_graph6(">>graph6<<Dhc\n") == cycle_graph(5));
  }

  TEST_CASE("graph6 round trip against a hand decoder") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
      const int n = static_cast<int>(rng() % 40);
      const Graph g = oracle::random_graph(n, 0.4, rng);
      const std::string s = emit_graph6(g);
      CHECK(parse_graph6(s) == g);
      CHECK(decode_by_hand(s) == g);
    }
  }

  TEST_CASE("graph6 errors") {
    CHECK(error_of([] { parse_graph6(""); }) == ErrorCode::kTruncatedPayload);
    CHECK(error_of([] { parse_graph6("D>c"); }) == ErrorCode::kByteOutOfRange);
    CHECK(error_of([] { parse_graph6("Dh"); }) == ErrorCode::kTruncatedPayload);
    CHECK(error_of([] { parse_graph6("Dhcc"); }) == ErrorCode::kTrailingBits);
    CHECK(error_of([] { parse_graph6("Dhd"); }) == ErrorCode::kTrailingBits);
    CHECK(error_of([] { parse_graph6("~"); }) == ErrorCode::kOversize);
  }

  TEST_CASE("find_induced") {
    CHECK_FALSE(find_induced(cycle_graph(5), path_graph(5)));
    const auto id = find_induced(path_graph(5), path_graph(5));
    REQUIRE(id);
    CHECK(is_induced_embedding(path_graph(5), path_graph(5), *id));
    const auto w = find_induced(g1_graph(), wheel_graph(5));
    REQUIRE(w);
    CHECK(is_induced_embedding(g1_graph(), wheel_graph(5), *w));
    CHECK(find_induced_within(g1_graph(), wheel_graph(5), to_set({3, 4, 5, 6, 7, 12})));
    CHECK_FALSE(find_induced(g1_graph(), complete_graph(4)));
  }

  TEST_CASE("find_induced agrees with brute force") {
    std::mt19937_64 rng(11);
    const std::vector<Graph> patterns{path_graph(4), cycle_graph(5), named("diamond"), named("claw"),
                                      named("2P2"), complete_graph(4), path_graph(5)};
    for (int trial = 0; trial < 300; ++trial) {
      const Graph g = oracle::random_graph(4 + static_cast<int>(rng() % 5), 0.5, rng);
      for (const Graph& h : patterns) {
        const auto e = find_induced(g, h);
        CHECK(e.has_value() == oracle::has_induced(g, h));
        if (e) CHECK(is_induced_embedding(g, h, *e));
        const int anchor = static_cast<int>(rng() % static_cast<unsigned>(g.order()));
        const auto t = find_induced_through(g, h, anchor);
        if (t) {
          CHECK(is_induced_embedding(g, h, *t));
          CHECK(std::find(t->begin(), t->end(), anchor) != t->end());
        }
      }
    }
  }

  TEST_CASE("is_free") {
    const std::vector<Graph> p5k4{path_graph(5), complete_graph(4)};
    CHECK(is_free(g2_graph(), p5k4));
    CHECK_FALSE(is_free(g2_graph(), std::vector<Graph>{f_graph()}));
    CHECK_FALSE(is_free(complete_graph(3), std::vector<Graph>{complete_graph(3)}));
  }

  TEST_CASE("free neighborhoods match the direct check") {
    std::mt19937_64 rng(3);
    const std::vector<Graph> forbidden{path_graph(5), complete_graph(4), named("diamond")};
    for (int trial = 0; trial < 60; ++trial) {
      const Graph g = oracle::random_graph(3 + static_cast<int>(rng() % 6), 0.45, rng);
      if (!is_free(g, forbidden)) continue;
      std::vector<VertexSet> expect;
      for (VertexSet n = 0; n < bit(g.order()); ++n) {
        if (oracle::is_free(add_vertex(g, n), forbidden)) expect.push_back(n);
      }
      CHECK(free_neighborhoods(g, forbidden) == expect);
    }
  }

  TEST_CASE("graph operations") {
    CHECK(are_isomorphic(add_universal_vertices(cycle_graph(5), 1), wheel_graph(5)));
    CHECK(are_isomorphic(add_universal_vertices(complete_graph(3), 1), complete_graph(4)));
    const Graph c5u2 = add_universal_vertices(cycle_graph(5), 2);
    CHECK(c5u2.order() == 7);
    CHECK(oracle::chi(c5u2) == 5);
    CHECK(chromatic_number(c5u2).chi == 5);
    CHECK(are_isomorphic(complement(cycle_graph(7)), named("C7bar")));
    CHECK(delete_vertex(wheel_graph(5), 5) == cycle_graph(5));
    CHECK(are_isomorphic(disjoint_union(empty_graph(1), complete_graph(3)), named("P1+K3")));
    CHECK(error_of([] { Graph(63); }) == ErrorCode::kOversize);
    CHECK(error_of([] { Graph g(3); g.add_edge(1, 1); }) == ErrorCode::kBadVertex);
    CHECK(error_of([] { named("K99x"); }) == ErrorCode::kUnknownName);
  }
}
