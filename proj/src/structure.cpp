#include "critgen/structure.hpp"

#include <algorithm>
#include <sstream>

#include "critgen/canon.hpp"
#include "critgen/catalog.hpp"
#include "critgen/criticality.hpp"
#include "critgen/induced.hpp"

namespace critgen {

std::string Witness::to_text() const {
  std::ostringstream os;
  for (int v : vertices) os << v << ' ';
  os << pattern;
  return os.str();
}

bool verify_witness(const Graph& g, const Witness& w) {
  const auto h = lookup_named(w.pattern);
  if (!h || static_cast<int>(w.vertices.size()) != h->order()) return false;
  VertexSet seen = 0;
  for (int v : w.vertices) {
    if (v < 0 || v >= g.order() || contains(seen, v)) return false;
    seen |= bit(v);
  }
  return are_isomorphic(induced_subgraph(g, seen), *h);
}

bool ClaimReport::ok() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimVerdict& c) { return c.holds || c.informational; });
}

std::string ClaimReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : claims) {
    os << c.name << ": ";
    if (c.holds) {
      os << "PASS";
    } else {
      os << "FAIL";
      if (c.witness) {
        os << ' ' << c.witness->to_text();
      } else if (!c.detail.empty()) {
        os << ' ' << c.detail;
      }
    }
    os << '\n';
  }
  return os.str();
}

namespace {

const std::vector<Graph>& c5_class() {
  static const std::vector<Graph> kClass{named("P5"), named("diamond")};
  return kClass;
}

const std::vector<Graph>& antihole_class() {
  static const std::vector<Graph> kClass{named("P5"), named("K4"), named("W5"), named("F")};
  return kClass;
}

const char* pattern_name(const Graph& h) {
  for (const char* name : {"P5", "diamond", "K4", "W5", "F"}) {
    if (are_isomorphic(h, named(name))) return name;
  }
  return "?";
}

std::optional<Witness> try_witness(const Graph& g, const char* pattern, std::vector<int> vertices) {
  Witness w{pattern, std::move(vertices)};
  if (verify_witness(g, w)) return w;
  return std::nullopt;
}

// Any forbidden copy inside `focus`, then anywhere.
std::optional<Witness> search_witness(const Graph& g, const std::vector<Graph>& forbidden, VertexSet focus) {
  for (const VertexSet scope : {focus, g.vertices()}) {
    for (const Graph& h : forbidden) {
      if (auto e = find_induced_within(g, h, scope)) return Witness{pattern_name(h), *std::move(e)};
    }
  }
  return std::nullopt;
}

std::optional<Witness> class_witness(const Graph& g, const std::vector<Graph>& forbidden) {
  for (const Graph& h : forbidden) {
    if (auto e = find_induced(g, h)) return Witness{pattern_name(h), *std::move(e)};
  }
  return std::nullopt;
}

template <std::size_t N>
VertexSet members(const std::array<int, N>& core) {
  VertexSet s = 0;
  for (int v : core) s |= bit(v);
  return s;
}

template <std::size_t N>
void check_core_labels(const Graph& g, std::span<const int> core, ErrorCode code, std::array<int, N>& out) {
  if (core.size() != N) throw Error(code, "expected " + std::to_string(N) + " vertices");
  VertexSet seen = 0;
  for (std::size_t i = 0; i < N; ++i) {
    const int v = core[i];
    if (v < 0 || v >= g.order() || contains(seen, v)) throw Error(code, "core vertices must be distinct and in range");
    seen |= bit(v);
    out[i] = v;
  }
}

// Positions (bit i-1 for v_i) of x's neighbors on the core.
template <std::size_t N>
unsigned core_trace(const Graph& g, const std::array<int, N>& core, int x) {
  unsigned m = 0;
  for (std::size_t i = 0; i < N; ++i) {
    if (g.adjacent(x, core[i])) m |= 1u << i;
  }
  return m;
}

template <std::size_t N>
unsigned positions(std::initializer_list<int> idx) {
  unsigned m = 0;
  for (int i : idx) m |= 1u << static_cast<unsigned>(((i - 1) % static_cast<int>(N) + static_cast<int>(N)) % static_cast<int>(N));
  return m;
}

std::vector<int> to_list(VertexSet s) { return to_vector(s); }

// ---------------------------------------------------------------- C5

std::optional<Witness> c5_taxonomy_witness(const Graph& g, const C5Context& c, int x) {
  for (int j = 1; j <= 5; ++j) {
    if (auto w = try_witness(g, "diamond", {x, c.v(j), c.v(j + 1), c.v(j + 2)})) return w;
  }
  for (int j = 1; j <= 5; ++j) {
    if (auto w = try_witness(g, "P5", {x, c.v(j), c.v(j + 1), c.v(j + 2), c.v(j + 3)})) return w;
    if (auto w = try_witness(g, "P5", {x, c.v(j), c.v(j - 1), c.v(j - 2), c.v(j - 3)})) return w;
  }
  return search_witness(g, c5_class(), members(c.cycle) | bit(x));
}

}  // namespace

C5Context partition_c5(const Graph& g, std::span<const int> cycle) {
  C5Context ctx;
  check_core_labels(g, cycle, ErrorCode::kNotACycle, ctx.cycle);
  for (int i = 1; i <= 5; ++i) {
    if (!g.adjacent(ctx.v(i), ctx.v(i + 1)) || g.adjacent(ctx.v(i), ctx.v(i + 2))) {
      throw Error(ErrorCode::kNotACycle, "listed vertices do not induce a 5-hole in order");
    }
  }
  for_each_vertex(g.vertices() & ~members(ctx.cycle), [&](int x) {
    const unsigned m = core_trace(g, ctx.cycle, x);
    if (m == 0) {
      ctx.z |= bit(x);
      return;
    }
    for (int i = 1; i <= 5; ++i) {
      if (m == positions<5>({i - 1, i + 1})) {
        ctx.r[static_cast<std::size_t>(i - 1)] |= bit(x);
        return;
      }
      if (m == positions<5>({i - 2, i, i + 2})) {
        ctx.y[static_cast<std::size_t>(i - 1)] |= bit(x);
        return;
      }
    }
    ctx.unclassified |= bit(x);
  });
  return ctx;
}

C5Context classify_c5(const Graph& g, std::span<const int> cycle) {
  C5Context ctx = partition_c5(g, cycle);
  if (auto w = class_witness(g, c5_class())) {
    const std::string what = "graph contains an induced " + w->pattern;
    throw StructureError(ErrorCode::kNotInClass, what, std::move(w));
  }
  if (ctx.unclassified != 0) {
    const int x = lowest(ctx.unclassified);
    throw StructureError(ErrorCode::kTaxonomyViolation, "vertex " + std::to_string(x) + " fits no class",
                         c5_taxonomy_witness(g, ctx, x), x);
  }
  return ctx;
}

namespace {

struct ClaimBuilder {
  const Graph& g;
  VertexSet core;
  const std::vector<Graph>& forbidden;
  ClaimVerdict verdict;

  // Records the first violation; the proof's witness if it verifies,
  // otherwise a search near the violators.
  void fail(VertexSet violators, std::string detail, std::initializer_list<std::pair<const char*, std::vector<int>>> proofs) {
    if (!verdict.holds) return;
    verdict.holds = false;
    verdict.detail = std::move(detail);
    for (const auto& [pattern, vertices] : proofs) {
      if (auto w = try_witness(g, pattern, vertices)) {
        verdict.witness = std::move(w);
        return;
      }
    }
    verdict.witness = search_witness(g, forbidden, core | violators);
  }

  void fail_with(std::optional<Witness> w, VertexSet violators, std::string detail) {
    if (!verdict.holds) return;
    verdict.holds = false;
    verdict.detail = std::move(detail);
    verdict.witness = w ? std::move(w) : search_witness(g, forbidden, core | violators);
  }
};

std::string pair_detail(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

}  // namespace

ClaimReport check_c5_claims(const C5Context& c, const Graph& g) {
  ClaimReport report;
  const VertexSet core = members(c.cycle);
  auto claim = [&](std::string name) { return ClaimBuilder{g, core, c5_class(), ClaimVerdict{std::move(name), true, false, std::nullopt, {}}}; };

  {
    auto b = claim("R_i independent");
    for (int i = 1; i <= 5 && b.verdict.holds; ++i) {
      const VertexSet r = c.r_set(i);
      for_each_vertex(r, [&](int x) {
        for_each_vertex(g.neighbors(x) & r, [&](int y) {
          b.fail(bit(x) | bit(y), pair_detail(x, y), {{"diamond", {x, y, c.v(i - 1), c.v(i + 1)}}});
        });
      });
    }
    report.claims.push_back(std::move(b.verdict));
  }
  {
    auto b = claim("Y_i independent");
    for (int i = 1; i <= 5 && b.verdict.holds; ++i) {
      const VertexSet y = c.y_set(i);
      for_each_vertex(y, [&](int x) {
        for_each_vertex(g.neighbors(x) & y, [&](int w) {
          b.fail(bit(x) | bit(w), pair_detail(x, w), {{"diamond", {x, w, c.v(i), c.v(i + 2)}}});
        });
      });
    }
    report.claims.push_back(std::move(b.verdict));
  }
  {
    auto b = claim("|Y_i|<=1");
    for (int i = 1; i <= 5 && b.verdict.holds; ++i) {
      const auto ys = to_list(c.y_set(i));
      if (ys.size() < 2) continue;
      const int x = ys[0];
      const int w = ys[1];
      b.fail(bit(x) | bit(w), pair_detail(x, w),
             {{"diamond", {x, w, c.v(i - 2), c.v(i + 2)}}, {"diamond", {x, w, c.v(i), c.v(i + 2)}}});
    }
    report.claims.push_back(std::move(b.verdict));
  }
  {
    auto b = claim("Z anticomplete to R");
    for (int i = 1; i <= 5 && b.verdict.holds; ++i) {
      for_each_vertex(c.r_set(i), [&](int r) {
        for_each_vertex(g.neighbors(r) & c.z, [&](int z) {
          b.fail(bit(r) | bit(z), pair_detail(z, r), {{"P5", {z, r, c.v(i + 1), c.v(i + 2), c.v(i + 3)}}});
        });
      });
    }
    report.claims.push_back(std::move(b.verdict));
  }
  {
    auto b = claim("Y vs Z components");
    for (int i = 1; i <= 5 && b.verdict.holds; ++i) {
      for_each_vertex(c.y_set(i), [&](int y) {
        // mixed on a component iff mixed on some edge of it
        for_each_vertex(g.neighbors(y) & c.z, [&](int z) {
          for_each_vertex(g.neighbors(z) & c.z & ~g.neighbors(y), [&](int w) {
            b.fail(bit(y) | bit(z) | bit(w), "y=" + std::to_string(y) + " edge " + pair_detail(w, z),
                   {{"P5", {w, z, y, c.v(i - 2), c.v(i - 1)}}});
          });
        });
      });
    }
    report.claims.push_back(std::move(b.verdict));
  }
  {
    auto b = claim("R_i complete to R_i+1");
    for (int i = 1; i <= 5 && b.verdict.holds; ++i) {
      for_each_vertex(c.r_set(i), [&](int r) {
        for_each_vertex(c.r_set(i + 1) & ~g.neighbors(r), [&](int s) {
          b.fail(bit(r) | bit(s), pair_detail(r, s), {{"P5", {s, c.v(i + 2), c.v(i + 3), c.v(i + 4), r}}});
        });
      });
    }
    report.claims.push_back(std::move(b.verdict));
  }
  {
    auto b = claim("R_i+R_i+2 at most one edge");
    for (int i = 1; i <= 5 && b.verdict.holds; ++i) {
      const VertexSet a = c.r_set(i);
      const VertexSet d = c.r_set(i + 2);
      std::vector<std::pair<int, int>> edges;
      for_each_vertex(a, [&](int x) { for_each_vertex(g.neighbors(x) & d, [&](int y) { edges.emplace_back(x, y); }); });
      if (edges.size() < 2) continue;
      // a vertex with two neighbors across gives a diamond through v_{i+1}
      for (std::size_t p = 0; p < edges.size() && b.verdict.holds; ++p) {
        for (std::size_t q = p + 1; q < edges.size() && b.verdict.holds; ++q) {
          const auto [x, y] = edges[p];
          const auto [x2, y2] = edges[q];
          const VertexSet viol = bit(x) | bit(y) | bit(x2) | bit(y2);
          if (x == x2) {
            b.fail(viol, pair_detail(x, y) + pair_detail(x2, y2), {{"diamond", {y, y2, c.v(i + 1), x}}});
          } else if (y == y2) {
            b.fail(viol, pair_detail(x, y) + pair_detail(x2, y2), {{"diamond", {x, x2, c.v(i + 1), y}}});
          }
        }
      }
      const auto [x, y] = edges[0];
      const auto [x2, y2] = edges[1];
      b.fail(bit(x) | bit(y) | bit(x2) | bit(y2), pair_detail(x, y) + pair_detail(x2, y2),
             {{"P5", {y, x, c.v(i - 1), x2, y2}}});
    }
    report.claims.push_back(std::move(b.verdict));
  }
  {
    auto b = claim("R_i complete to Y_i");
    for (int i = 1; i <= 5 && b.verdict.holds; ++i) {
      for_each_vertex(c.r_set(i), [&](int r) {
        for_each_vertex(c.y_set(i) & ~g.neighbors(r), [&](int y) {
          b.fail(bit(r) | bit(y), pair_detail(r, y), {{"P5", {y, c.v(i + 2), c.v(i + 1), r, c.v(i - 1)}}});
        });
      });
    }
    report.claims.push_back(std::move(b.verdict));
  }
  {
    auto b = claim("R_i anticomplete to Y_j");
    for (int i = 1; i <= 5 && b.verdict.holds; ++i) {
      for_each_vertex(c.r_set(i), [&](int r) {
        for (int d = 1; d <= 4; ++d) {
          for_each_vertex(c.y_set(i + d) & g.neighbors(r), [&](int y) {
            b.fail(bit(r) | bit(y), pair_detail(r, y),
                   {{"diamond", {r, y, c.v(i + 1), c.v(i - 1)}},
                    {"diamond", {r, y, c.v(i), c.v(i - 1)}},
                    {"diamond", {r, y, c.v(i), c.v(i + 1)}}});
          });
        }
      });
    }
    report.claims.push_back(std::move(b.verdict));
  }
  {
    ClaimVerdict z{"|Z|<=32", popcount(c.z) <= 32, true, std::nullopt, "|Z|=" + std::to_string(popcount(c.z))};
    report.claims.push_back(std::move(z));
    int worst = 0;
    for (VertexSet r : c.r) worst = std::max(worst, popcount(r));
    ClaimVerdict rb{"|R_i|<=3", worst <= 3, true, std::nullopt, "max |R_i|=" + std::to_string(worst)};
    report.claims.push_back(std::move(rb));
  }
  return report;
}

// ---------------------------------------------------------------- 7-antihole

namespace {

std::optional<Witness> antihole_taxonomy_witness(const Graph& g, const Antihole7Context& c, int x) {
  const VertexSet core = members(c.antihole);
  if (auto e = find_induced_within(g, named("K4"), (g.neighbors(x) & core) | bit(x))) {
    return Witness{"K4", *std::move(e)};
  }
  // two consecutive neighbors only: a 5-hole through x with v_{j+4} seeing four of it
  for (int j = 1; j <= 7; ++j) {
    if (auto w = try_witness(g, "F", {c.v(j - 1), c.v(j), c.v(j + 1), c.v(j + 2), x, c.v(j + 4)})) return w;
  }
  for (int j = 1; j <= 7; ++j) {
    if (auto w = try_witness(g, "P5", {x, c.v(j), c.v(j + 5), c.v(j + 1), c.v(j + 6)})) return w;
    if (auto w = try_witness(g, "P5", {x, c.v(j), c.v(j + 2), c.v(j - 1), c.v(j + 1)})) return w;
  }
  for (int j = 1; j <= 7; ++j) {
    if (auto w = try_witness(g, "W5", {c.v(j - 1), c.v(j), c.v(j + 1), c.v(j + 2), x, c.v(j + 4)})) return w;
  }
  for (int j = 1; j <= 7; ++j) {
    if (!g.adjacent(x, c.v(j)) || !g.adjacent(x, c.v(j + 1))) continue;
    VertexSet scope = bit(x);
    for (int d = 2; d <= 6; ++d) scope |= bit(c.v(j + d));
    if (auto e = find_induced_within(g, named("P5"), scope)) return Witness{"P5", *std::move(e)};
  }
  return search_witness(g, antihole_class(), core | bit(x));
}

// The antihole with v_i replaced by f, for f in F_i.
Antihole7Context swap_in(const Graph& g, const Antihole7Context& c, int i, int f) {
  std::array<int, 7> labels = c.antihole;
  labels[static_cast<std::size_t>(((i - 1) % 7 + 7) % 7)] = f;
  return partition_antihole7(g, labels);
}

}  // namespace

Antihole7Context partition_antihole7(const Graph& g, std::span<const int> antihole) {
  Antihole7Context ctx;
  check_core_labels(g, antihole, ErrorCode::kNotAnAntihole, ctx.antihole);
  for (int i = 1; i <= 7; ++i) {
    for (int d = 1; d <= 3; ++d) {
      if (g.adjacent(ctx.v(i), ctx.v(i + d)) != (d >= 2)) {
        throw Error(ErrorCode::kNotAnAntihole, "listed vertices do not induce a 7-antihole in order");
      }
    }
  }
  for_each_vertex(g.vertices() & ~members(ctx.antihole), [&](int x) {
    const unsigned m = core_trace(g, ctx.antihole, x);
    if (m == 0) {
      ctx.z |= bit(x);
      return;
    }
    const unsigned all = (1u << 7) - 1;
    for (int i = 1; i <= 7; ++i) {
      const unsigned tri = positions<7>({i - 1, i, i + 1});
      if (m == tri) {
        ctx.t[static_cast<std::size_t>(i - 1)] |= bit(x);
        return;
      }
      if (m == (all & ~tri)) {
        ctx.f[static_cast<std::size_t>(i - 1)] |= bit(x);
        return;
      }
    }
    ctx.unclassified |= bit(x);
  });
  return ctx;
}

Antihole7Context classify_antihole7(const Graph& g, std::span<const int> antihole) {
  Antihole7Context ctx = partition_antihole7(g, antihole);
  if (ctx.unclassified != 0) {
    const int x = lowest(ctx.unclassified);
    throw StructureError(ErrorCode::kTaxonomyViolation, "vertex " + std::to_string(x) + " fits no T_i or F_i",
                         antihole_taxonomy_witness(g, ctx, x), x);
  }
  for (int i = 1; i <= 7; ++i) {
    for_each_vertex(ctx.z, [&](int z) {
      if (const VertexSet ts = g.neighbors(z) & ctx.t_set(i)) {
        const int t = lowest(ts);
        throw StructureError(ErrorCode::kTaxonomyViolation, "vertex " + std::to_string(z) + " has no antihole neighbor",
                             try_witness(g, "P5", {z, t, ctx.v(i + 1), ctx.v(i + 4), ctx.v(i + 2)}), z);
      }
      if (const VertexSet fs = g.neighbors(z) & ctx.f_set(i)) {
        const int f = lowest(fs);
        throw StructureError(ErrorCode::kTaxonomyViolation, "vertex " + std::to_string(z) + " has no antihole neighbor",
                             try_witness(g, "P5", {z, f, ctx.v(i + 2), ctx.v(i - 1), ctx.v(i + 1)}), z);
      }
    });
  }
  // what remains of Z cannot reach the antihole
  if (auto w = class_witness(g, antihole_class())) {
    const std::string what = "graph contains an induced " + w->pattern;
    throw StructureError(ErrorCode::kNotInClass, what, std::move(w));
  }
  return ctx;
}

ClaimReport check_antihole7_claims(const Antihole7Context& c, const Graph& g) {
  ClaimReport report;
  const VertexSet core = members(c.antihole);
  auto claim = [&](std::string name) { return ClaimBuilder{g, core, antihole_class(), ClaimVerdict{std::move(name), true, false, std::nullopt, {}}}; };

  // x seen against the antihole with v_i swapped for f
  auto swapped_witness = [&](int i, int f, int x) -> std::optional<Witness> {
    const Antihole7Context alt = swap_in(g, c, i, f);
    if (!contains(alt.unclassified, x)) return std::nullopt;
    return antihole_taxonomy_witness(g, alt, x);
  };

  {
    auto b = claim("T_i anticomplete to T_i+1");
    for (int i = 1; i <= 7 && b.verdict.holds; ++i) {
      for_each_vertex(c.t_set(i), [&](int t) {
        for_each_vertex(g.neighbors(t) & c.t_set(i + 1), [&](int s) {
          b.fail(bit(t) | bit(s), pair_detail(t, s), {{"P5", {s, t, c.v(i - 1), c.v(i + 3), c.v(i + 5)}}});
        });
      });
    }
    report.claims.push_back(std::move(b.verdict));
  }
  {
    auto b = claim("T_i complete to T_i+3");
    for (int i = 1; i <= 7 && b.verdict.holds; ++i) {
      for_each_vertex(c.t_set(i), [&](int t) {
        for_each_vertex(c.t_set(i + 3) & ~g.neighbors(t), [&](int s) {
          b.fail(bit(t) | bit(s), pair_detail(t, s), {{"P5", {t, c.v(i + 1), c.v(i + 5), c.v(i + 2), s}}});
        });
      });
    }
    report.claims.push_back(std::move(b.verdict));
  }
  {
    auto b = claim("F_i complete to T_i-1,T_i,T_i+1");
    for (int i = 1; i <= 7 && b.verdict.holds; ++i) {
      for_each_vertex(c.f_set(i), [&](int f) {
        const VertexSet near = c.t_set(i - 1) | c.t_set(i) | c.t_set(i + 1);
        for_each_vertex(near & ~g.neighbors(f), [&](int t) {
          b.fail_with(swapped_witness(i, f, t), bit(f) | bit(t), pair_detail(f, t));
        });
      });
    }
    report.claims.push_back(std::move(b.verdict));
  }
  {
    auto b = claim("F_i anticomplete to T_i+3");
    for (int i = 1; i <= 7 && b.verdict.holds; ++i) {
      for_each_vertex(c.f_set(i), [&](int f) {
        // T_{i+3} and T_{i-3} are the same relation read from either side
        for (int d : {3, -3}) {
          for_each_vertex(c.t_set(i + d) & g.neighbors(f), [&](int t) {
            b.fail_with(swapped_witness(i, f, t), bit(f) | bit(t), pair_detail(f, t));
          });
        }
      });
    }
    report.claims.push_back(std::move(b.verdict));
  }
  {
    auto b = claim("F_i anticomplete to F_i+1");
    for (int i = 1; i <= 7 && b.verdict.holds; ++i) {
      for_each_vertex(c.f_set(i), [&](int f) {
        for_each_vertex(g.neighbors(f) & c.f_set(i + 1), [&](int h) {
          b.fail(bit(f) | bit(h), pair_detail(f, h), {{"K4", {f, h, c.v(i + 3), c.v(i + 5)}}});
        });
      });
    }
    report.claims.push_back(std::move(b.verdict));
  }
  {
    auto b = claim("F_i complete to F_i+3");
    for (int i = 1; i <= 7 && b.verdict.holds; ++i) {
      for_each_vertex(c.f_set(i), [&](int f) {
        for (int d : {3, -3}) {
          for_each_vertex(c.f_set(i + d) & ~g.neighbors(f), [&](int h) {
            b.fail_with(swapped_witness(i, f, h), bit(f) | bit(h), pair_detail(f, h));
          });
        }
      });
    }
    report.claims.push_back(std::move(b.verdict));
  }
  {
    auto b = claim("N(t) in N(v_i-3)+N(v_i+3)");
    for (int i = 1; i <= 7 && b.verdict.holds; ++i) {
      const VertexSet cover = g.neighbors(c.v(i - 3)) | g.neighbors(c.v(i + 3));
      for_each_vertex(c.t_set(i), [&](int t) {
        for_each_vertex(g.neighbors(t) & ~cover, [&](int x) {
          b.fail_with(std::nullopt, bit(t) | bit(x), pair_detail(t, x));
        });
      });
    }
    report.claims.push_back(std::move(b.verdict));
  }
  {
    auto b = claim("T_i misses F_i-2 or F_i+2");
    for (int i = 1; i <= 7 && b.verdict.holds; ++i) {
      for_each_vertex(c.t_set(i), [&](int t) {
        const VertexSet lo = g.neighbors(t) & c.f_set(i - 2);
        const VertexSet hi = g.neighbors(t) & c.f_set(i + 2);
        if (lo == 0 || hi == 0) return;
        const int f = lowest(lo);
        const int h = lowest(hi);
        b.fail(bit(t) | bit(f) | bit(h), pair_detail(t, f) + pair_detail(t, h), {{"K4", {t, f, h, c.v(i)}}});
      });
    }
    report.claims.push_back(std::move(b.verdict));
  }
  {
    auto b = claim("F_i misses T_i-2 or T_i+2");
    for (int i = 1; i <= 7 && b.verdict.holds; ++i) {
      for_each_vertex(c.f_set(i), [&](int f) {
        const VertexSet hi = g.neighbors(f) & c.t_set(i + 2);
        const VertexSet lo = g.neighbors(f) & c.t_set(i - 2);
        if (lo == 0 || hi == 0) return;
        const int t = lowest(hi);
        const int s = lowest(lo);
        b.fail(bit(f) | bit(t) | bit(s), pair_detail(f, t) + pair_detail(f, s),
               {{"F", {c.v(i), c.v(i + 3), t, s, c.v(i + 4), f}}});
      });
    }
    report.claims.push_back(std::move(b.verdict));
  }
  return report;
}

// ---------------------------------------------------------------- 4-coloring

namespace {

[[noreturn]] void contradiction(const std::string& what) {
  throw Error(ErrorCode::kInternalContradiction, what);
}

}  // namespace

std::string AntiholeColoringTrace::to_text() const {
  std::ostringstream os;
  os << "first step lists: " << first_step.to_string() << '\n';
  for (const auto& [name, set] : sets) {
    os << name << ':';
    for_each_vertex(set, [&](int v) { os << ' ' << v; });
    os << '\n';
  }
  return os.str();
}

Coloring four_color_via_antihole(const Graph& g, std::span<const int> antihole, AntiholeColoringTrace* trace) {
  if (auto w = class_witness(g, antihole_class())) {
    const std::string what = "graph contains an induced " + w->pattern;
    throw StructureError(ErrorCode::kPreconditionViolated, what, std::move(w));
  }
  const Antihole7Context c = classify_antihole7(g, antihole);

  const int n = g.order();
  Coloring color(static_cast<std::size_t>(n), 0);
  auto paint = [&](VertexSet s, int col) { for_each_vertex(s, [&](int v) { color[static_cast<std::size_t>(v)] = col; }); };

  // v1 -> 1, v2 v3 -> 2, v4 v5 -> 3, v6 v7 -> 4
  constexpr std::array<int, 7> kCycleColors{1, 2, 2, 3, 3, 4, 4};
  ListAssignment lists(n, 4);
  for (int i = 1; i <= 7; ++i) lists.set_list(c.v(i), color_bit(kCycleColors[static_cast<std::size_t>(i - 1)]));
  for (int i = 1; i <= 7; ++i) lists = propagate_once(g, lists, c.v(i));

  struct Expect {
    VertexSet set;
    ColorSet list;
    const char* name;
  };
  const std::array<Expect, 14> expected{{
      {c.f_set(1), make_color_set({1}), "F1"},        {c.f_set(2), make_color_set({1, 2}), "F2"},
      {c.f_set(3), make_color_set({2}), "F3"},        {c.f_set(4), make_color_set({3}), "F4"},
      {c.f_set(5), make_color_set({3}), "F5"},        {c.f_set(6), make_color_set({4}), "F6"},
      {c.f_set(7), make_color_set({1, 4}), "F7"},     {c.t_set(1), make_color_set({3}), "T1"},
      {c.t_set(2), make_color_set({3, 4}), "T2"},     {c.t_set(3), make_color_set({1, 4}), "T3"},
      {c.t_set(4), make_color_set({1, 4}), "T4"},     {c.t_set(5), make_color_set({1, 2}), "T5"},
      {c.t_set(6), make_color_set({1, 2}), "T6"},     {c.t_set(7), make_color_set({2, 3}), "T7"},
  }};
  for (const Expect& e : expected) {
    for_each_vertex(e.set, [&](int v) {
      if (lists.list(v) != e.list) contradiction(std::string("first step: unexpected list on ") + e.name);
    });
  }

  // second step: forced chains out of F5, F3 and F4, F6
  const VertexSet t7p = g.neighbors_of_set(c.f_set(5)) & c.t_set(7);
  const VertexSet t5p = g.neighbors_of_set(t7p | c.f_set(3)) & c.t_set(5);
  const VertexSet f7p = g.neighbors_of_set(t5p) & c.f_set(7);
  const VertexSet t2p = g.neighbors_of_set(c.f_set(4)) & c.t_set(2);
  const VertexSet t4p = g.neighbors_of_set(t2p | c.f_set(6)) & c.t_set(4);
  const VertexSet f2p = g.neighbors_of_set(t4p) & c.f_set(2);

  const VertexSet t2pp = c.t_set(2) & ~t2p;
  const VertexSet t4pp = c.t_set(4) & ~t4p;
  const VertexSet t5pp = c.t_set(5) & ~t5p;
  const VertexSet t7pp = c.t_set(7) & ~t7p;
  const VertexSet f2pp = c.f_set(2) & ~f2p;
  const VertexSet f7pp = c.f_set(7) & ~f7p;

  for (int i = 1; i <= 7; ++i) paint(bit(c.v(i)), kCycleColors[static_cast<std::size_t>(i - 1)]);
  paint(c.f_set(1), 1);
  paint(c.f_set(3), 2);
  paint(c.f_set(4), 3);
  paint(c.f_set(5), 3);
  paint(c.f_set(6), 4);
  paint(t7p, 2);
  paint(t5p, 1);
  paint(f7p, 4);
  paint(t2p, 4);
  paint(t4p, 1);
  paint(f2p, 2);

  // final step on G''
  paint(f7pp, 4);
  paint(f2pp, 1);
  const VertexSet t4pp_four = t4pp & g.neighbors_of_set(f2pp);
  paint(t4pp_four, 4);
  paint(t4pp & ~t4pp_four, 1);
  const VertexSet t2pp_three = t2pp & g.neighbors_of_set(f7pp | t4pp_four);
  paint(t2pp_three, 3);
  paint(t2pp & ~t2pp_three, 4);
  const VertexSet t7pp_two = t7pp & g.neighbors_of_set(t2pp_three);
  paint(t7pp_two, 2);
  paint(t7pp & ~t7pp_two, 3);
  const VertexSet t5pp_one = t5pp & g.neighbors_of_set(t7pp_two);
  paint(t5pp_one, 1);
  paint(t5pp & ~t5pp_one, 2);

  // the three eliminated sets go last
  paint(c.t_set(1), 3);
  paint(c.t_set(3), 4);
  paint(c.t_set(6), 2);

  if (c.z != 0) {
    const Graph rest = induced_subgraph(g, c.z);
    const auto sub = is_k_colorable(rest, 4);
    if (!sub) contradiction("a component avoiding the antihole is not 4-colorable");
    const auto ids = to_vector(c.z);
    for (std::size_t j = 0; j < ids.size(); ++j) color[static_cast<std::size_t>(ids[j])] = (*sub)[j];
  }

  if (trace != nullptr) {
    trace->first_step = lists;
    trace->sets = {{"T'7", t7p},    {"T'5", t5p},    {"F'7", f7p},    {"T'2", t2p},   {"T'4", t4p},
                   {"F'2", f2p},    {"T''2", t2pp},  {"T''4", t4pp},  {"T''5", t5pp}, {"T''7", t7pp},
                   {"F''2", f2pp},  {"F''7", f7pp}};
  }

  if (!is_proper_coloring(g, color, 4)) {
    for (int v = 0; v < n; ++v) {
      for_each_vertex(g.neighbors(v), [&](int u) {
        if (u > v && color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
          contradiction("edge " + pair_detail(v, u) + " is monochromatic with color " +
                        std::to_string(color[static_cast<std::size_t>(v)]));
        }
      });
    }
    contradiction("coloring is not proper");
  }
  return color;
}

Graph sample_class_member(const Graph& core, const std::vector<Graph>& forbidden, int order, std::mt19937_64& rng) {
  if (order > kMaxVertices) throw Error(ErrorCode::kOversize, "order exceeds vertex cap");
  Graph g = core;
  while (g.order() < order) {
    auto options = free_neighborhoods(g, forbidden);
    options.erase(std::remove(options.begin(), options.end(), VertexSet{0}), options.end());
    if (options.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    g = add_vertex(g, options[pick(rng)]);
  }
  return g;
}

}  // namespace critgen
