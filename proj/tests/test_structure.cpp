#include <functional>
#include <map>
#include <random>

#include "critgen/catalog.hpp"
#include "critgen/coloring.hpp"
#include "critgen/induced.hpp"
#include "critgen/structure.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

using namespace critgen;

namespace {

const std::array<int, 5> kCycle{0, 1, 2, 3, 4};
const std::array<int, 7> kAntihole{0, 1, 2, 3, 4, 5, 6};

// Vertex of the cycle/antihole with 1-based cyclic index.
int cv(int i, int len) { return ((i - 1) % len + len) % len; }

VertexSet hood(std::initializer_list<int> idx, int len) {
  VertexSet s = 0;
  for (int i : idx) s |= bit(cv(i, len));
  return s;
}

const ClaimVerdict& claim(const ClaimReport& r, const std::string& name) {
  for (const auto& c : r.claims) {
    if (c.name == name) return c;
  }
  FAIL("no claim " << name);
  throw std::logic_error("unreachable");
}

std::optional<StructureError> structure_error(const std::function<void()>& f) {
  try {
    f();
  } catch (const StructureError& e) {
    return e;
  }
  return std::nullopt;
}

void check_witnesses(const Graph& g, const ClaimReport& r) {
  for (const auto& c : r.claims) {
    if (c.witness) CHECK(verify_witness(g, *c.witness));
  }
}

// The claims of the C5 taxonomy unfolded straight from their wording.
std::map<std::string, bool> naive_c5(const C5Context& c, const Graph& g) {
  auto anti = [&](VertexSet a, VertexSet b) {
    bool ok = true;
    for_each_vertex(a, [&](int x) { ok = ok && (g.neighbors(x) & b) == 0; });
    return ok;
  };
  auto full = [&](VertexSet a, VertexSet b) {
    bool ok = true;
    for_each_vertex(a, [&](int x) { ok = ok && (b & ~g.neighbors(x)) == 0; });
    return ok;
  };
  std::map<std::string, bool> out;
  bool r_ind = true, y_ind = true, y_small = true, z_r = true, y_z = true, rr = true, r2 = true, ry = true, ry_anti = true;
  VertexSet all_r = 0;
  for (int i = 1; i <= 5; ++i) all_r |= c.r_set(i);
  z_r = anti(c.z, all_r);
  const auto zcomp = components(g, c.z);
  for (int i = 1; i <= 5; ++i) {
    r_ind = r_ind && g.is_independent(c.r_set(i));
    y_ind = y_ind && g.is_independent(c.y_set(i));
    y_small = y_small && popcount(c.y_set(i)) <= 1;
    rr = rr && full(c.r_set(i), c.r_set(i + 1));
    int edges = 0;
    for_each_vertex(c.r_set(i), [&](int x) { edges += popcount(g.neighbors(x) & c.r_set(i + 2)); });
    r2 = r2 && edges <= 1;
    ry = ry && full(c.r_set(i), c.y_set(i));
    for (int d = 1; d <= 4; ++d) ry_anti = ry_anti && anti(c.r_set(i), c.y_set(i + d));
    for_each_vertex(c.y_set(i), [&](int y) {
      for (VertexSet comp : zcomp) {
        const VertexSet seen = g.neighbors(y) & comp;
        y_z = y_z && (seen == 0 || seen == comp);
      }
    });
  }
  out["R_i independent"] = r_ind;
  out["Y_i independent"] = y_ind;
  out["|Y_i|<=1"] = y_small;
  out["Z anticomplete to R"] = z_r;
  out["Y vs Z components"] = y_z;
  out["R_i complete to R_i+1"] = rr;
  out["R_i+R_i+2 at most one edge"] = r2;
  out["R_i complete to Y_i"] = ry;
  out["R_i anticomplete to Y_j"] = ry_anti;
  return out;
}

std::map<std::string, bool> naive_antihole(const Antihole7Context& c, const Graph& g) {
  auto anti = [&](VertexSet a, VertexSet b) {
    bool ok = true;
    for_each_vertex(a, [&](int x) { ok = ok && (g.neighbors(x) & b) == 0; });
    return ok;
  };
  auto full = [&](VertexSet a, VertexSet b) {
    bool ok = true;
    for_each_vertex(a, [&](int x) { ok = ok && (b & ~g.neighbors(x)) == 0; });
    return ok;
  };
  bool tt1 = true, tt3 = true, ft = true, ft3 = true, ff1 = true, ff3 = true, nt = true, tf = true, ftt = true;
  for (int i = 1; i <= 7; ++i) {
    tt1 = tt1 && anti(c.t_set(i), c.t_set(i + 1));
    tt3 = tt3 && full(c.t_set(i), c.t_set(i + 3));
    ft = ft && full(c.f_set(i), c.t_set(i - 1) | c.t_set(i) | c.t_set(i + 1));
    ft3 = ft3 && anti(c.f_set(i), c.t_set(i + 3)) && anti(c.f_set(i), c.t_set(i - 3));
    ff1 = ff1 && anti(c.f_set(i), c.f_set(i + 1));
    ff3 = ff3 && full(c.f_set(i), c.f_set(i + 3));
    const VertexSet cover = g.neighbors(c.v(i - 3)) | g.neighbors(c.v(i + 3));
    for_each_vertex(c.t_set(i), [&](int t) {
      nt = nt && (g.neighbors(t) & ~cover) == 0;
      tf = tf && ((g.neighbors(t) & c.f_set(i - 2)) == 0 || (g.neighbors(t) & c.f_set(i + 2)) == 0);
    });
    for_each_vertex(c.f_set(i), [&](int f) {
      ftt = ftt && ((g.neighbors(f) & c.t_set(i - 2)) == 0 || (g.neighbors(f) & c.t_set(i + 2)) == 0);
    });
  }
  return {{"T_i anticomplete to T_i+1", tt1},         {"T_i complete to T_i+3", tt3},
          {"F_i complete to T_i-1,T_i,T_i+1", ft},    {"F_i anticomplete to T_i+3", ft3},
          {"F_i anticomplete to F_i+1", ff1},         {"F_i complete to F_i+3", ff3},
          {"N(t) in N(v_i-3)+N(v_i+3)", nt},          {"T_i misses F_i-2 or F_i+2", tf},
          {"F_i misses T_i-2 or T_i+2", ftt}};
}

}  // namespace

TEST_SUITE("structure") {
  TEST_CASE("C5 taxonomy examples") {
    const C5Context empty = classify_c5(cycle_graph(5), kCycle);
    CHECK(empty.z == 0);
    for (int i = 1; i <= 5; ++i) CHECK((empty.r_set(i) | empty.y_set(i)) == 0);

    const Graph r1 = add_vertex(cycle_graph(5), hood({2, 5}, 5));
    CHECK(classify_c5(r1, kCycle).r_set(1) == bit(5));

    const auto err = structure_error([] { classify_c5(wheel_graph(5), kCycle); });
    REQUIRE(err);
    CHECK(err->code() == ErrorCode::kNotInClass);
    REQUIRE(err->witness());
    CHECK(err->witness()->pattern == "diamond");
    CHECK(verify_witness(wheel_graph(5), *err->witness()));

    CHECK(error_of([] { classify_c5(path_graph(5), kCycle); }) == ErrorCode::kNotACycle);
  }

  TEST_CASE("C5 claims examples") {
    CHECK(check_c5_claims(classify_c5(cycle_graph(5), kCycle), cycle_graph(5)).ok());

    Graph g = add_vertex(cycle_graph(5), hood({2, 4}, 5));  // R_3
    g = add_vertex(g, hood({3, 5}, 5));                    // R_4
    const C5Context ctx = partition_c5(g, kCycle);
    REQUIRE(ctx.r_set(3) == bit(5));
    REQUIRE(ctx.r_set(4) == bit(6));
    const ClaimReport report = check_c5_claims(ctx, g);
    const ClaimVerdict& rr = claim(report, "R_i complete to R_i+1");
    CHECK_FALSE(rr.holds);
    REQUIRE(rr.witness);
    // r4, v5, v1, v2, r3
    CHECK(rr.witness->vertices == std::vector<int>{6, 4, 0, 1, 5});
    CHECK(rr.witness->pattern == "P5");
    CHECK(report.to_text().find("R_i complete to R_i+1: FAIL 6 4 0 1 5 P5") != std::string::npos);
  }

  TEST_CASE("antihole taxonomy examples") {
    const Antihole7Context empty = classify_antihole7(antihole7(), kAntihole);
    for (int i = 1; i <= 7; ++i) CHECK((empty.t_set(i) | empty.f_set(i)) == 0);

    const Graph t1 = add_vertex(antihole7(), hood({7, 1, 2}, 7));
    CHECK(classify_antihole7(t1, kAntihole).t_set(1) == bit(7));

    const Graph bad = add_vertex(antihole7(), hood({4, 5}, 7));
    const auto err = structure_error([&] { classify_antihole7(bad, kAntihole); });
    REQUIRE(err);
    CHECK(err->code() == ErrorCode::kTaxonomyViolation);
    CHECK(err->vertex() == 7);
    REQUIRE(err->witness());
    CHECK(err->witness()->pattern == "F");
    // hole v3 v4 v5 v6 x, then v1
    CHECK(err->witness()->vertices == std::vector<int>{2, 3, 4, 5, 7, 0});
    CHECK(verify_witness(bad, *err->witness()));

    CHECK(error_of([] { classify_antihole7(cycle_graph(7), kAntihole); }) == ErrorCode::kNotAnAntihole);
  }

  TEST_CASE("antihole claims examples") {
    CHECK(check_antihole7_claims(classify_antihole7(antihole7(), kAntihole), antihole7()).ok());

    Graph g = add_vertex(antihole7(), hood({7, 1, 2}, 7));  // t1
    g = add_vertex(g, hood({1, 2, 3}, 7) | bit(7));        // t2, adjacent to t1
    const Antihole7Context ctx = partition_antihole7(g, kAntihole);
    const ClaimReport report = check_antihole7_claims(ctx, g);
    const ClaimVerdict& tt = claim(report, "T_i anticomplete to T_i+1");
    CHECK_FALSE(tt.holds);
    REQUIRE(tt.witness);
    // t2, t1, v7, v4, v6
    CHECK(tt.witness->vertices == std::vector<int>{8, 7, 6, 3, 5});
  }

  TEST_CASE("four-coloring through the antihole") {
    const Coloring base = four_color_via_antihole(antihole7(), kAntihole);
    CHECK(base == Coloring{1, 2, 2, 3, 3, 4, 4});

    const Graph t2 = add_vertex(antihole7(), hood({1, 2, 3}, 7));
    AntiholeColoringTrace trace;
    const Coloring c = four_color_via_antihole(t2, kAntihole, &trace);
    CHECK((c[7] == 3 || c[7] == 4));
    CHECK(trace.first_step.list(7) == make_color_set({3, 4}));
    CHECK(is_proper_coloring(t2, c, 4));

    const auto err = structure_error([] {
      const Graph k4 = add_vertex(antihole7(), hood({1, 3, 5}, 7));
      four_color_via_antihole(k4, kAntihole);
    });
    REQUIRE(err);
    CHECK(err->code() == ErrorCode::kPreconditionViolated);
    REQUIRE(err->witness());
  }

  TEST_CASE("C5 claims hold on sampled class members") {
    std::mt19937_64 rng(1);
    const std::vector<Graph> cls{path_graph(5), named("diamond")};
    int failures = 0;
    for (int i = 0; i < 1000; ++i) {
      const Graph g = sample_class_member(cycle_graph(5), cls, 6 + static_cast<int>(rng() % 7), rng);
      const C5Context ctx = classify_c5(g, kCycle);
      const ClaimReport r = check_c5_claims(ctx, g);
      if (!r.ok()) ++failures;
    }
    CHECK(failures == 0);
  }

  TEST_CASE("antihole claims and coloring hold on sampled class members") {
    std::mt19937_64 rng(2);
    const std::vector<Graph> cls{path_graph(5), complete_graph(4), wheel_graph(5), f_graph()};
    int failures = 0;
    for (int i = 0; i < 500; ++i) {
      const Graph g = sample_class_member(antihole7(), cls, 8 + static_cast<int>(rng() % 6), rng);
      const ClaimReport r = check_antihole7_claims(classify_antihole7(g, kAntihole), g);
      const Coloring c = four_color_via_antihole(g, kAntihole);
      if (!r.ok() || !is_proper_coloring(g, c, 4) || !is_k_colorable(g, 4)) ++failures;
    }
    CHECK(failures == 0);
  }

  TEST_CASE("C5 checker agrees with the unfolded definitions") {
    std::mt19937_64 rng(3);
    int compared = 0;
    for (int trial = 0; trial < 3000; ++trial) {
      Graph g = cycle_graph(5);
      const int extra = 1 + static_cast<int>(rng() % 4);
      for (int j = 0; j < extra; ++j) {
        // bias towards the taxonomy so the sets are populated
        const int i = 1 + static_cast<int>(rng() % 5);
        VertexSet n;
        switch (rng() % 4) {
          case 0: n = hood({i - 1, i + 1}, 5); break;
          case 1: n = hood({i - 2, i, i + 2}, 5); break;
          case 2: n = 0; break;
          default: n = rng() & first_n(5); break;
        }
        n |= rng() & (g.vertices() & ~first_n(5));
        g = add_vertex(g, n);
      }
      const C5Context ctx = partition_c5(g, kCycle);
      const ClaimReport r = check_c5_claims(ctx, g);
      const auto naive = naive_c5(ctx, g);
      for (const auto& [name, holds] : naive) {
        CAPTURE(name);
        CHECK(claim(r, name).holds == holds);
      }
      if (is_free(g, std::vector<Graph>{path_graph(5), named("diamond")})) check_witnesses(g, r);
      ++compared;
    }
    CHECK(compared == 3000);
  }

  TEST_CASE("antihole checker agrees with the unfolded definitions") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 3000; ++trial) {
      Graph g = antihole7();
      const int extra = 1 + static_cast<int>(rng() % 2);
      for (int j = 0; j < extra; ++j) {
        const int i = 1 + static_cast<int>(rng() % 7);
        VertexSet n = hood({i - 1, i, i + 1}, 7);
        if (rng() % 2) n = first_n(7) & ~n;
        n |= rng() & (g.vertices() & ~first_n(7));
        g = add_vertex(g, n);
      }
      const Antihole7Context ctx = partition_antihole7(g, kAntihole);
      const ClaimReport r = check_antihole7_claims(ctx, g);
      for (const auto& [name, holds] : naive_antihole(ctx, g)) {
        CAPTURE(name);
        CHECK(claim(r, name).holds == holds);
      }
      // witnesses only claim something when the violation is real
      for (const auto& c : r.claims) {
        if (c.witness) CHECK(verify_witness(g, *c.witness));
      }
    }
  }

  TEST_CASE("every taxonomy violation carries a verifiable witness") {
    std::mt19937_64 rng(5);
    int violations = 0;
    for (int trial = 0; trial < 2000; ++trial) {
      const Graph g = add_vertex(antihole7(), rng() & first_n(7));
      const auto err = structure_error([&] { classify_antihole7(g, kAntihole); });
      if (!err) continue;
      ++violations;
      REQUIRE(err->witness());
      CHECK(verify_witness(g, *err->witness()));
    }
    CHECK(violations > 0);
    for (int trial = 0; trial < 500; ++trial) {
      const Graph g = add_vertex(cycle_graph(5), rng() & first_n(5));
      const auto err = structure_error([&] { classify_c5(g, kCycle); });
      if (!err) continue;
      REQUIRE(err->witness());
      CHECK(verify_witness(g, *err->witness()));
    }
  }
}
