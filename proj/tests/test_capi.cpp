#include <string>
#include <vector>

#include "critgen/critgen.h"
#include "doctest.h"

namespace {

std::string to_g6(const cg_graph* g) {
  size_t needed = 0;
  REQUIRE(cg_graph_to_graph6(g, nullptr, 0, &needed) == CG_OK);
  std::string buf(needed + 1, '\0');
  REQUIRE(cg_graph_to_graph6(g, buf.data(), buf.size(), &needed) == CG_OK);
  buf.resize(needed);
  return buf;
}

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("graph handles and the buffer protocol") {
    cg_graph* c5 = nullptr;
    REQUIRE(cg_graph_from_graph6("Dhc", &c5) == CG_OK);
    CHECK(cg_graph_order(c5) == 5);
    CHECK(to_g6(c5) == "Dhc");

    char tiny[2];
    size_t needed = 0;
    CHECK(cg_graph_to_graph6(c5, tiny, sizeof tiny, &needed) == CG_BUFFER_TOO_SMALL);
    CHECK(needed == 3);

    cg_vset nb = 0;
    CHECK(cg_graph_neighbors(c5, 0, &nb) == CG_OK);
    CHECK(nb == ((1u << 1) | (1u << 4)));
    CHECK(cg_graph_neighbors(c5, 9, &nb) == CG_BAD_VERTEX);

    int chi = 0;
    std::vector<int> col(5);
    CHECK(cg_chromatic_number(c5, &chi, col.data()) == CG_OK);
    CHECK(chi == 3);

    cg_graph* w5 = nullptr;
    REQUIRE(cg_graph_add_universal(c5, 1, &w5) == CG_OK);
    int yes = 0;
    CHECK(cg_is_k_vertex_critical(w5, 4, &yes, nullptr, 0, &needed) == CG_OK);
    CHECK(yes == 1);

    cg_graph* named = nullptr;
    REQUIRE(cg_graph_from_name("W5", &named) == CG_OK);
    CHECK(cg_are_isomorphic(w5, named, &yes) == CG_OK);
    CHECK(yes == 1);

    cg_graph_free(named);
    cg_graph_free(w5);
    cg_graph_free(c5);
  }

  TEST_CASE("errors come back as codes with a message") {
    cg_graph* g = nullptr;
    CHECK(cg_graph_from_graph6("Dh", &g) == CG_TRUNCATED_PAYLOAD);
    CHECK(g == nullptr);
    CHECK(std::string(cg_last_error()).size() > 0);
    CHECK(cg_graph_from_name("nope", &g) == CG_UNKNOWN_NAME);
    CHECK(cg_graph_from_name(nullptr, &g) == CG_NULL_ARGUMENT);
    CHECK(std::string(cg_status_name(CG_NOT_IN_CLASS)) == "NotInClass");
    cg_graph_free(nullptr);
  }

  TEST_CASE("propagation through the C interface") {
    cg_graph* p4 = nullptr;
    REQUIRE(cg_graph_from_name("P4", &p4) == CG_OK);
    uint64_t lists[4] = {0b001, 0b011, 0b110, 0b011};
    CHECK(cg_propagate(p4, 3, lists, 0, 1) == CG_OK);
    CHECK(lists[1] == 0b010);
    CHECK(lists[2] == 0b100);
    CHECK(lists[3] == 0b011);
    uint64_t unforced[4] = {0b011, 0b011, 0b110, 0b011};
    CHECK(cg_propagate(p4, 3, unforced, 0, 0) == CG_NOT_FORCED);
    cg_graph_free(p4);
  }

  TEST_CASE("structural errors carry a witness") {
    cg_graph* w5 = nullptr;
    REQUIRE(cg_graph_from_name("W5", &w5) == CG_OK);
    const int cycle[5] = {0, 1, 2, 3, 4};
    size_t needed = 0;
    CHECK(cg_classify_c5(w5, cycle, nullptr, 0, &needed) == CG_NOT_IN_CLASS);
    CHECK(std::string(cg_last_witness()).find("diamond") != std::string::npos);
    cg_graph_free(w5);
  }

  TEST_CASE("generation through the C interface") {
    cg_graph* seed = nullptr;
    cg_graph* p5 = nullptr;
    cg_graph* k4 = nullptr;
    REQUIRE(cg_graph_from_name("F", &seed) == CG_OK);
    REQUIRE(cg_graph_from_name("P5", &p5) == CG_OK);
    REQUIRE(cg_graph_from_name("K4", &k4) == CG_OK);
    cg_gen_config* cfg = nullptr;
    REQUIRE(cg_gen_config_new(5, seed, &cfg) == CG_OK);
    CHECK(cg_gen_config_add_forbidden(cfg, p5) == CG_OK);
    CHECK(cg_gen_config_add_forbidden(cfg, k4) == CG_OK);
    CHECK(cg_gen_config_set_jobs(cfg, 0) == CG_INVALID_ARGUMENT);
    CHECK(cg_gen_config_set_rule(cfg, CG_RULE_NOT_FREE, 0) == CG_INVALID_ARGUMENT);
    cg_gen_result* res = nullptr;
    REQUIRE(cg_generate(cfg, &res) == CG_OK);
    CHECK(cg_gen_result_status(res) == CG_GEN_COMPLETED);
    REQUIRE(cg_gen_result_count(res) == 1);
    cg_graph* found = nullptr;
    REQUIRE(cg_gen_result_graph(res, 0, &found) == CG_OK);
    cg_graph* g2 = nullptr;
    REQUIRE(cg_graph_from_name("G2", &g2) == CG_OK);
    int iso = 0;
    CHECK(cg_are_isomorphic(found, g2, &iso) == CG_OK);
    CHECK(iso == 1);
    CHECK(cg_gen_result_nodes_expanded(res) > 0);

    cg_gen_config* bad = nullptr;
    cg_graph* k3 = nullptr;
    REQUIRE(cg_graph_from_name("K3", &k3) == CG_OK);
    REQUIRE(cg_gen_config_new(5, seed, &bad) == CG_OK);
    CHECK(cg_gen_config_add_forbidden(bad, k3) == CG_OK);
    cg_gen_result* none = nullptr;
    CHECK(cg_generate(bad, &none) == CG_SEED_NOT_FREE);

    for (cg_graph* g : {seed, p5, k4, found, g2, k3}) cg_graph_free(g);
    cg_gen_result_free(res);
    cg_gen_config_free(cfg);
    cg_gen_config_free(bad);
  }
}
