#include "critgen/critgen.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <random>
#include <sstream>
#include <string>

#include "critgen/canon.hpp"
#include "critgen/catalog.hpp"
#include "critgen/coloring.hpp"
#include "critgen/criticality.hpp"
#include "critgen/generation.hpp"
#include "critgen/graph6.hpp"
#include "critgen/induced.hpp"
#include "critgen/structure.hpp"

using namespace critgen;

struct cg_graph {
  Graph g;
};

struct cg_gen_config {
  GenerationConfig cfg;
};

struct cg_gen_result {
  GenerationReport report;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_witness;

cg_status fail(cg_status s, std::string what) {
  last_error = std::move(what);
  return s;
}

// Runs f, translating exceptions into status codes.
template <typename F>
cg_status guarded(F&& f) {
  last_error.clear();
  last_witness.clear();
  try {
    return f();
  } catch (const StructureError& e) {
    if (e.witness()) last_witness = e.witness()->to_text();
    return fail(static_cast<cg_status>(e.code()), e.what());
  } catch (const Error& e) {
    return fail(static_cast<cg_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CG_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(CG_INTERNAL_ERROR, e.what());
  }
}

cg_status copy_text(const std::string& s, char* buf, size_t cap, size_t* needed) {
  if (needed != nullptr) *needed = s.size();
  if (buf == nullptr && cap == 0) return CG_OK;
  if (buf == nullptr) return fail(CG_NULL_ARGUMENT, "buf is null");
  if (cap <= s.size()) return fail(CG_BUFFER_TOO_SMALL, "buffer needs " + std::to_string(s.size() + 1) + " bytes");
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return CG_OK;
}

cg_status wrap(Graph g, cg_graph** out) {
  *out = new cg_graph{std::move(g)};
  return CG_OK;
}

#define CG_REQUIRE(p) \
  if ((p) == nullptr) return fail(CG_NULL_ARGUMENT, #p " is null")

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw Error(ErrorCode::kBadVertex, "vertex " + std::to_string(v) + " out of range");
}

std::vector<Graph> collect(const cg_graph* const* forbidden, size_t count) {
  std::vector<Graph> out;
  for (size_t i = 0; i < count; ++i) {
    if (forbidden[i] == nullptr) throw Error(ErrorCode::kInvalidArgument, "null forbidden graph");
    out.push_back(forbidden[i]->g);
  }
  return out;
}

std::string set_text(VertexSet s) {
  std::string out;
  for_each_vertex(s, [&](int v) { out += ' ' + std::to_string(v); });
  return out;
}

std::string c5_text(const C5Context& c) {
  std::ostringstream os;
  os << "Z:" << set_text(c.z) << '\n';
  for (int i = 1; i <= 5; ++i) os << 'R' << i << ':' << set_text(c.r_set(i)) << '\n';
  for (int i = 1; i <= 5; ++i) os << 'Y' << i << ':' << set_text(c.y_set(i)) << '\n';
  return os.str();
}

std::string antihole_text(const Antihole7Context& c) {
  std::ostringstream os;
  for (int i = 1; i <= 7; ++i) os << 'T' << i << ':' << set_text(c.t_set(i)) << '\n';
  for (int i = 1; i <= 7; ++i) os << 'F' << i << ':' << set_text(c.f_set(i)) << '\n';
  os << "Z:" << set_text(c.z) << '\n';
  return os.str();
}

}  // namespace

extern "C" {

const char* cg_status_name(cg_status status) {
  switch (status) {
    case CG_NULL_ARGUMENT: return "NullArgument";
    case CG_BUFFER_TOO_SMALL: return "BufferTooSmall";
    case CG_OUT_OF_MEMORY: return "OutOfMemory";
    case CG_INTERNAL_ERROR: return "InternalError";
    default: return to_string(static_cast<ErrorCode>(status));
  }
}

const char* cg_last_error(void) { return last_error.c_str(); }
const char* cg_last_witness(void) { return last_witness.c_str(); }

cg_status cg_graph_new(int n, cg_graph** out) {
  CG_REQUIRE(out);
  return guarded([&] { return wrap(Graph(n), out); });
}

cg_status cg_graph_from_graph6(const char* line, cg_graph** out) {
  CG_REQUIRE(line);
  CG_REQUIRE(out);
  return guarded([&] { return wrap(parse_graph6(line), out); });
}

cg_status cg_graph_from_name(const char* name, cg_graph** out) {
  CG_REQUIRE(name);
  CG_REQUIRE(out);
  return guarded([&] { return wrap(named(name), out); });
}

cg_status cg_graph_clone(const cg_graph* g, cg_graph** out) {
  CG_REQUIRE(g);
  CG_REQUIRE(out);
  return guarded([&] { return wrap(g->g, out); });
}

void cg_graph_free(cg_graph* g) { delete g; }

int cg_graph_order(const cg_graph* g) { return g == nullptr ? -1 : g->g.order(); }

cg_status cg_graph_neighbors(const cg_graph* g, int v, cg_vset* out) {
  CG_REQUIRE(g);
  CG_REQUIRE(out);
  return guarded([&] {
    check_vertex(g->g, v);
    *out = g->g.neighbors(v);
    return CG_OK;
  });
}

cg_status cg_graph_add_edge(cg_graph* g, int u, int v) {
  CG_REQUIRE(g);
  return guarded([&] {
    g->g.add_edge(u, v);
    return CG_OK;
  });
}

cg_status cg_graph_remove_edge(cg_graph* g, int u, int v) {
  CG_REQUIRE(g);
  return guarded([&] {
    g->g.remove_edge(u, v);
    return CG_OK;
  });
}

cg_status cg_graph_add_universal(const cg_graph* g, int count, cg_graph** out) {
  CG_REQUIRE(g);
  CG_REQUIRE(out);
  return guarded([&] { return wrap(add_universal_vertices(g->g, count), out); });
}

cg_status cg_graph_to_graph6(const cg_graph* g, char* buf, size_t cap, size_t* needed) {
  CG_REQUIRE(g);
  return guarded([&] { return copy_text(emit_graph6(g->g), buf, cap, needed); });
}

cg_status cg_graph_to_text(const cg_graph* g, char* buf, size_t cap, size_t* needed) {
  CG_REQUIRE(g);
  return guarded([&] { return copy_text(to_adjacency_text(g->g), buf, cap, needed); });
}

cg_status cg_chromatic_number(const cg_graph* g, int* chi, int* coloring) {
  CG_REQUIRE(g);
  CG_REQUIRE(chi);
  return guarded([&] {
    const ChromaticResult r = chromatic_number(g->g);
    *chi = r.chi;
    if (coloring != nullptr) std::copy(r.coloring.begin(), r.coloring.end(), coloring);
    return CG_OK;
  });
}

cg_status cg_is_k_colorable(const cg_graph* g, int k, int* yes, int* coloring) {
  CG_REQUIRE(g);
  CG_REQUIRE(yes);
  return guarded([&] {
    if (k < 0) throw Error(ErrorCode::kInvalidArgument, "k must be nonnegative");
    const auto c = is_k_colorable(g->g, k);
    *yes = c.has_value();
    if (c && coloring != nullptr) std::copy(c->begin(), c->end(), coloring);
    return CG_OK;
  });
}

cg_status cg_propagate(const cg_graph* g, int k, uint64_t* lists, int v, int exhaustive) {
  CG_REQUIRE(g);
  CG_REQUIRE(lists);
  return guarded([&] {
    const auto n = static_cast<std::size_t>(g->g.order());
    ListAssignment in(k, std::vector<ColorSet>(lists, lists + n));
    const ListAssignment out = exhaustive != 0 ? propagate_exhaustive(g->g, in, v) : propagate_once(g->g, in, v);
    for (std::size_t u = 0; u < n; ++u) lists[u] = out.list(static_cast<int>(u));
    return CG_OK;
  });
}

cg_status cg_is_k_vertex_critical(const cg_graph* g, int k, int* yes, char* buf, size_t cap, size_t* needed) {
  CG_REQUIRE(g);
  CG_REQUIRE(yes);
  return guarded([&] {
    if (auto cert = is_k_vertex_critical(g->g, k)) {
      *yes = 1;
      return copy_text(cert->to_text(), buf, cap, needed);
    }
    *yes = 0;
    return copy_text(criticality_failure(g->g, k), buf, cap, needed);
  });
}

cg_status cg_clique_cutset(const cg_graph* g, int* found, cg_vset* cutset) {
  CG_REQUIRE(g);
  CG_REQUIRE(found);
  return guarded([&] {
    const auto c = has_clique_cutset(g->g);
    *found = c.has_value();
    if (c && cutset != nullptr) *cutset = *c;
    return CG_OK;
  });
}

cg_status cg_dominated_subsets(const cg_graph* g, int max_size, int* found, cg_vset* x, cg_vset* y) {
  CG_REQUIRE(g);
  CG_REQUIRE(found);
  return guarded([&] {
    const auto d = find_dominated_subsets(g->g, max_size);
    *found = d.has_value();
    if (d && x != nullptr) *x = d->x;
    if (d && y != nullptr) *y = d->y;
    return CG_OK;
  });
}

cg_status cg_is_free(const cg_graph* g, const cg_graph* const* forbidden, size_t count, int* yes) {
  CG_REQUIRE(g);
  CG_REQUIRE(yes);
  if (count > 0) CG_REQUIRE(forbidden);
  return guarded([&] {
    *yes = is_free(g->g, collect(forbidden, count));
    return CG_OK;
  });
}

cg_status cg_find_induced(const cg_graph* g, const cg_graph* h, int* found, int* image) {
  CG_REQUIRE(g);
  CG_REQUIRE(h);
  CG_REQUIRE(found);
  return guarded([&] {
    const auto e = find_induced(g->g, h->g);
    *found = e.has_value();
    if (e && image != nullptr) std::copy(e->begin(), e->end(), image);
    return CG_OK;
  });
}

cg_status cg_canonical_graph6(const cg_graph* g, char* buf, size_t cap, size_t* needed) {
  CG_REQUIRE(g);
  return guarded([&] { return copy_text(canonical_key(g->g).bytes, buf, cap, needed); });
}

cg_status cg_are_isomorphic(const cg_graph* a, const cg_graph* b, int* yes) {
  CG_REQUIRE(a);
  CG_REQUIRE(b);
  CG_REQUIRE(yes);
  return guarded([&] {
    *yes = are_isomorphic(a->g, b->g);
    return CG_OK;
  });
}

cg_status cg_gen_config_new(int k, const cg_graph* seed, cg_gen_config** out) {
  CG_REQUIRE(seed);
  CG_REQUIRE(out);
  return guarded([&] {
    auto* c = new cg_gen_config;
    c->cfg.k = k;
    c->cfg.seed = seed->g;
    *out = c;
    return CG_OK;
  });
}

void cg_gen_config_free(cg_gen_config* cfg) { delete cfg; }

cg_status cg_gen_config_add_forbidden(cg_gen_config* cfg, const cg_graph* h) {
  CG_REQUIRE(cfg);
  CG_REQUIRE(h);
  return guarded([&] {
    cfg->cfg.forbidden.push_back(h->g);
    return CG_OK;
  });
}

cg_status cg_gen_config_set_max_vertices(cg_gen_config* cfg, int n) {
  CG_REQUIRE(cfg);
  if (n < 0 || n > kMaxVertices) return fail(CG_INVALID_ARGUMENT, "max_vertices out of range");
  cfg->cfg.max_vertices = n;
  return CG_OK;
}

cg_status cg_gen_config_set_timeout_ms(cg_gen_config* cfg, int64_t ms) {
  CG_REQUIRE(cfg);
  if (ms < 0) return fail(CG_INVALID_ARGUMENT, "timeout must be nonnegative");
  cfg->cfg.time_budget = std::chrono::milliseconds(ms);
  return CG_OK;
}

cg_status cg_gen_config_set_jobs(cg_gen_config* cfg, int jobs) {
  CG_REQUIRE(cfg);
  if (jobs < 1) return fail(CG_INVALID_ARGUMENT, "jobs must be positive");
  cfg->cfg.worker_count = jobs;
  return CG_OK;
}

cg_status cg_gen_config_set_rule(cg_gen_config* cfg, cg_rule rule, int enabled) {
  CG_REQUIRE(cfg);
  PruneFlags& p = cfg->cfg.prune;
  switch (rule) {
    case CG_RULE_DOMINATED_PAIR: p.dominated_pair = enabled != 0; return CG_OK;
    case CG_RULE_CLIQUE_CUTSET: p.clique_cutset = enabled != 0; return CG_OK;
    case CG_RULE_DOMINATED_SUBSETS: p.dominated_subsets = enabled != 0; return CG_OK;
    case CG_RULE_EXTENDABLE_VERTEX: p.extendable_vertex = enabled != 0; return CG_OK;
    default: return fail(CG_INVALID_ARGUMENT, "rule cannot be switched");
  }
}

cg_status cg_gen_config_set_subset_size(cg_gen_config* cfg, int max_size) {
  CG_REQUIRE(cfg);
  if (max_size < 1) return fail(CG_INVALID_ARGUMENT, "subset size must be positive");
  cfg->cfg.prune.subset_max_size = max_size;
  return CG_OK;
}

cg_status cg_generate(const cg_gen_config* cfg, cg_gen_result** out) {
  CG_REQUIRE(cfg);
  CG_REQUIRE(out);
  return guarded([&] {
    *out = new cg_gen_result{generate(cfg->cfg)};
    return CG_OK;
  });
}

void cg_gen_result_free(cg_gen_result* r) { delete r; }

cg_gen_status cg_gen_result_status(const cg_gen_result* r) {
  return r == nullptr ? CG_GEN_COMPLETED : static_cast<cg_gen_status>(r->report.status);
}

size_t cg_gen_result_count(const cg_gen_result* r) { return r == nullptr ? 0 : r->report.found.size(); }

cg_status cg_gen_result_graph(const cg_gen_result* r, size_t i, cg_graph** out) {
  CG_REQUIRE(r);
  CG_REQUIRE(out);
  if (i >= r->report.found.size()) return fail(CG_INVALID_ARGUMENT, "index out of range");
  return guarded([&] { return wrap(r->report.found[i].graph, out); });
}

uint64_t cg_gen_result_nodes_expanded(const cg_gen_result* r) {
  return r == nullptr ? 0 : r->report.stats.nodes_expanded;
}

uint64_t cg_gen_result_pruned(const cg_gen_result* r, cg_rule rule) {
  if (r == nullptr || rule < 0 || rule >= CG_RULE_COUNT) return 0;
  return r->report.stats.pruned[static_cast<std::size_t>(rule)];
}

cg_status cg_gen_result_text(const cg_gen_result* r, char* buf, size_t cap, size_t* needed) {
  CG_REQUIRE(r);
  return guarded([&] { return copy_text(r->report.to_text(), buf, cap, needed); });
}

cg_status cg_classify_c5(const cg_graph* g, const int cycle[5], char* buf, size_t cap, size_t* needed) {
  CG_REQUIRE(g);
  CG_REQUIRE(cycle);
  return guarded([&] { return copy_text(c5_text(classify_c5(g->g, std::span<const int>(cycle, 5))), buf, cap, needed); });
}

cg_status cg_classify_antihole7(const cg_graph* g, const int antihole[7], char* buf, size_t cap, size_t* needed) {
  CG_REQUIRE(g);
  CG_REQUIRE(antihole);
  return guarded([&] {
    return copy_text(antihole_text(classify_antihole7(g->g, std::span<const int>(antihole, 7))), buf, cap, needed);
  });
}

cg_status cg_check_c5_claims(const cg_graph* g, const int cycle[5], int* ok, char* buf, size_t cap, size_t* needed) {
  CG_REQUIRE(g);
  CG_REQUIRE(cycle);
  CG_REQUIRE(ok);
  return guarded([&] {
    const ClaimReport report = check_c5_claims(classify_c5(g->g, std::span<const int>(cycle, 5)), g->g);
    *ok = report.ok();
    return copy_text(report.to_text(), buf, cap, needed);
  });
}

cg_status cg_check_antihole7_claims(const cg_graph* g, const int antihole[7], int* ok, char* buf, size_t cap,
                                    size_t* needed) {
  CG_REQUIRE(g);
  CG_REQUIRE(antihole);
  CG_REQUIRE(ok);
  return guarded([&] {
    const ClaimReport report =
        check_antihole7_claims(classify_antihole7(g->g, std::span<const int>(antihole, 7)), g->g);
    *ok = report.ok();
    return copy_text(report.to_text(), buf, cap, needed);
  });
}

cg_status cg_four_color_via_antihole(const cg_graph* g, const int antihole[7], int* coloring) {
  CG_REQUIRE(g);
  CG_REQUIRE(antihole);
  CG_REQUIRE(coloring);
  return guarded([&] {
    const Coloring c = four_color_via_antihole(g->g, std::span<const int>(antihole, 7));
    std::copy(c.begin(), c.end(), coloring);
    return CG_OK;
  });
}

cg_status cg_sample_class_member(const cg_graph* core, const cg_graph* const* forbidden, size_t count, int order,
                                 uint64_t seed, cg_graph** out) {
  CG_REQUIRE(core);
  CG_REQUIRE(out);
  if (count > 0) CG_REQUIRE(forbidden);
  return guarded([&] {
    std::mt19937_64 rng(seed);
    return wrap(sample_class_member(core->g, collect(forbidden, count), order, rng), out);
  });
}

}  // extern "C"
