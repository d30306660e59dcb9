#include <random>

#include "critgen/catalog.hpp"
#include "critgen/coloring.hpp"
#include "critgen/criticality.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace critgen;

TEST_SUITE("criticality") {
  TEST_CASE("certificates") {
    for (const auto& [g, k] : std::vector<std::pair<Graph, int>>{
             {cycle_graph(5), 3}, {g1_graph(), 5}, {g2_graph(), 5}, {wheel_graph(5), 4}, {complete_graph(4), 4}}) {
      const auto cert = is_k_vertex_critical(g, k);
      REQUIRE(cert);
      CHECK(verify_certificate(g, *cert));
      CHECK(oracle::critical(g, k));
      CHECK(criticality_failure(g, k).empty());
    }
    CHECK_FALSE(is_k_vertex_critical(cycle_graph(6), 3));
    CHECK(criticality_failure(cycle_graph(6), 3) == "chi is 2");
  }

  TEST_CASE("certificate matches the definition on small graphs") {
    for (int n = 1; n <= 6; ++n) {
      const std::uint64_t codes = std::uint64_t{1} << (n * (n - 1) / 2);
      for (std::uint64_t code = 0; code < codes; ++code) {
        const Graph g = oracle::labeled_graph(n, code);
        const int k = oracle::chi(g);
        const auto cert = is_k_vertex_critical(g, k);
        CHECK(cert.has_value() == oracle::critical(g, k));
        if (cert) CHECK(verify_certificate(g, *cert));
      }
    }
  }

  TEST_CASE("clique cutsets") {
    const auto p3 = has_clique_cutset(path_graph(3));
    REQUIRE(p3);
    CHECK(*p3 == bit(1));
    CHECK_FALSE(has_clique_cutset(cycle_graph(5)));
    CHECK_FALSE(has_clique_cutset(g2_graph()));
    CHECK(has_clique_cutset(empty_graph(2)) == VertexSet{0});
  }

  TEST_CASE("clique cutsets agree with brute force on connected graphs") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 400; ++trial) {
      const Graph g = oracle::random_graph(2 + static_cast<int>(rng() % 7), 0.5, rng);
      if (!is_connected(g)) continue;
      const auto cut = has_clique_cutset(g);
      CHECK(cut.has_value() == oracle::has_clique_cutset(g));
      if (cut) {
        CHECK(g.is_clique(*cut));
        CHECK(components(g, g.vertices() & ~*cut).size() >= 2);
      }
    }
  }

  TEST_CASE("dominated pairs and subsets") {
    const auto p3 = find_dominated_pair(path_graph(3));
    REQUIRE(p3);
    CHECK(((p3->first == 0 && p3->second == 2) || (p3->first == 2 && p3->second == 0)));
    CHECK_FALSE(find_dominated_pair(cycle_graph(5)));
    CHECK_FALSE(find_dominated_pair(g1_graph()));

    const auto xy = find_dominated_subsets(path_graph(3), 1);
    REQUIRE(xy);
    CHECK(xy->x == bit(0));
    CHECK(xy->y == bit(2));
    const auto two = find_dominated_subsets(named("2P2"), 2);
    REQUIRE(two);
    CHECK(popcount(two->x | two->y) >= 2);
    CHECK_FALSE(find_dominated_subsets(g2_graph(), 2));
    CHECK_FALSE(find_dominated_subsets(g1_graph(), 2));
  }

  TEST_CASE("dominated subsets agree with brute force") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 150; ++trial) {
      const Graph g = oracle::random_graph(2 + static_cast<int>(rng() % 6), 0.5, rng);
      for (int m = 1; m <= 2; ++m) {
        CHECK(find_dominated_subsets(g, m).has_value() == oracle::has_dominated_subsets(g, m));
      }
      for (const auto& [u, v] : all_dominated_pairs(g)) {
        CHECK_FALSE(g.adjacent(u, v));
        CHECK((g.neighbors(v) & ~g.neighbors(u)) == 0);
      }
    }
  }

  TEST_CASE("extendable vertices agree with exhaustive colorings") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 150; ++trial) {
      const Graph g = oracle::random_graph(2 + static_cast<int>(rng() % 6), 0.5, rng);
      const int colors = 1 + static_cast<int>(rng() % 3);
      const auto got = extendable_vertices(g, colors);
      for (int u = 0; u < g.order(); ++u) {
        // u is extendable iff no proper coloring of g - u puts every color on N(u)
        const Graph h = delete_vertex(g, u);
        bool blocked = false;
        std::vector<int> a(static_cast<std::size_t>(h.order()), 1);
        for (bool more = true; more && !blocked;) {
          if (is_proper_coloring(h, a, colors)) {
            ColorSet seen = 0;
            for (int w = 0; w < h.order(); ++w) {
              const int orig = w < u ? w : w + 1;
              if (g.adjacent(u, orig)) seen |= color_bit(a[static_cast<std::size_t>(w)]);
            }
            blocked = seen == palette(colors);
          }
          std::size_t i = 0;
          while (i < a.size() && a[i] == colors) a[i++] = 1;
          if (i == a.size()) more = false;
          else ++a[i];
        }
        const bool listed = std::find(got.begin(), got.end(), u) != got.end();
        CHECK(listed == !blocked);
      }
    }
  }

  TEST_CASE("critical graphs have no clique cutset and no small dominated subsets") {
    for (const auto& [g, k] : std::vector<std::pair<Graph, int>>{
             {cycle_graph(5), 3}, {cycle_graph(7), 3}, {g1_graph(), 5}, {g2_graph(), 5}, {wheel_graph(5), 4}}) {
      REQUIRE(is_k_vertex_critical(g, k));
      CHECK_FALSE(has_clique_cutset(g));
      CHECK_FALSE(find_dominated_subsets(g, 2));
    }
  }
}
