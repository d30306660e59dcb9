#ifndef CRITGEN_CRITGEN_H
#define CRITGEN_CRITGEN_H

/* C interface to libcritgen. Every function returns a cg_status; on
 * failure cg_last_error() describes it (thread-local, valid until the next
 * call on the same thread). Text outputs follow the buffer protocol: the
 * full length without the terminator is stored in *needed, and the text is
 * copied only when cap exceeds it; otherwise CG_BUFFER_TOO_SMALL. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CG_API __declspec(dllexport)
#else
#define CG_API __attribute__((visibility("default")))
#endif

typedef enum cg_status {
  CG_OK = 0,
  CG_BYTE_OUT_OF_RANGE,
  CG_TRUNCATED_PAYLOAD,
  CG_TRAILING_BITS,
  CG_OVERSIZE,
  CG_BAD_VERTEX,
  CG_NOT_FORCED,
  CG_SEED_NOT_FREE,
  CG_NOT_A_CYCLE,
  CG_NOT_AN_ANTIHOLE,
  CG_NOT_IN_CLASS,
  CG_TAXONOMY_VIOLATION,
  CG_PRECONDITION_VIOLATED,
  CG_INTERNAL_CONTRADICTION,
  CG_UNKNOWN_NAME,
  CG_INVALID_ARGUMENT,
  CG_NULL_ARGUMENT = 100,
  CG_BUFFER_TOO_SMALL,
  CG_OUT_OF_MEMORY,
  CG_INTERNAL_ERROR
} cg_status;

typedef struct cg_graph cg_graph;
typedef struct cg_gen_config cg_gen_config;
typedef struct cg_gen_result cg_gen_result;

/* Bit v of a cg_vset is vertex v; bit c-1 of a color list is color c. */
typedef uint64_t cg_vset;

CG_API const char* cg_status_name(cg_status status);
CG_API const char* cg_last_error(void);
/* Witness attached to the last structural error, "v1 v2 ... pattern", or "". */
CG_API const char* cg_last_witness(void);

/* ---- graphs ---- */

CG_API cg_status cg_graph_new(int n, cg_graph** out);
CG_API cg_status cg_graph_from_graph6(const char* line, cg_graph** out);
/* Catalog names such as "P5", "C7bar", "W5", "G1"; case-sensitive. */
CG_API cg_status cg_graph_from_name(const char* name, cg_graph** out);
CG_API cg_status cg_graph_clone(const cg_graph* g, cg_graph** out);
CG_API void cg_graph_free(cg_graph* g);

CG_API int cg_graph_order(const cg_graph* g);
CG_API cg_status cg_graph_neighbors(const cg_graph* g, int v, cg_vset* out);
CG_API cg_status cg_graph_add_edge(cg_graph* g, int u, int v);
CG_API cg_status cg_graph_remove_edge(cg_graph* g, int u, int v);
CG_API cg_status cg_graph_add_universal(const cg_graph* g, int count, cg_graph** out);
CG_API cg_status cg_graph_to_graph6(const cg_graph* g, char* buf, size_t cap, size_t* needed);
CG_API cg_status cg_graph_to_text(const cg_graph* g, char* buf, size_t cap, size_t* needed);

/* ---- coloring ---- */

/* coloring may be NULL; otherwise it receives order(g) colors in 1..chi. */
CG_API cg_status cg_chromatic_number(const cg_graph* g, int* chi, int* coloring);
CG_API cg_status cg_is_k_colorable(const cg_graph* g, int k, int* yes, int* coloring);
/* lists holds order(g) color lists over palette [k]; rewritten in place.
 * exhaustive != 0 runs propagation to a fixpoint. */
CG_API cg_status cg_propagate(const cg_graph* g, int k, uint64_t* lists, int v, int exhaustive);

/* ---- criticality and membership ---- */

/* *yes is set; the text is the certificate when critical and the first
 * failing condition otherwise. buf may be NULL with cap 0. */
CG_API cg_status cg_is_k_vertex_critical(const cg_graph* g, int k, int* yes, char* buf, size_t cap,
                                         size_t* needed);
/* *found is 0 or 1; *cutset receives the clique when found. */
CG_API cg_status cg_clique_cutset(const cg_graph* g, int* found, cg_vset* cutset);
CG_API cg_status cg_dominated_subsets(const cg_graph* g, int max_size, int* found, cg_vset* x, cg_vset* y);
CG_API cg_status cg_is_free(const cg_graph* g, const cg_graph* const* forbidden, size_t count, int* yes);
/* image receives order(h) host vertices when *found is 1. */
CG_API cg_status cg_find_induced(const cg_graph* g, const cg_graph* h, int* found, int* image);

/* ---- isomorphism ---- */

CG_API cg_status cg_canonical_graph6(const cg_graph* g, char* buf, size_t cap, size_t* needed);
CG_API cg_status cg_are_isomorphic(const cg_graph* a, const cg_graph* b, int* yes);

/* ---- generation ---- */

typedef enum cg_rule {
  CG_RULE_NOT_FREE = 0,
  CG_RULE_SEEN_BEFORE,
  CG_RULE_DOMINATED_PAIR,
  CG_RULE_CLIQUE_CUTSET,
  CG_RULE_DOMINATED_SUBSETS,
  CG_RULE_EXTENDABLE_VERTEX,
  CG_RULE_COUNT
} cg_rule;

typedef enum cg_gen_status { CG_GEN_COMPLETED = 0, CG_GEN_VERTEX_CAP_HIT, CG_GEN_TIME_CAP_HIT } cg_gen_status;

/* The seed is copied. */
CG_API cg_status cg_gen_config_new(int k, const cg_graph* seed, cg_gen_config** out);
CG_API void cg_gen_config_free(cg_gen_config* cfg);
CG_API cg_status cg_gen_config_add_forbidden(cg_gen_config* cfg, const cg_graph* h);
CG_API cg_status cg_gen_config_set_max_vertices(cg_gen_config* cfg, int n);
CG_API cg_status cg_gen_config_set_timeout_ms(cg_gen_config* cfg, int64_t ms);
CG_API cg_status cg_gen_config_set_jobs(cg_gen_config* cfg, int jobs);
/* Only the obstruction rules (dominated pair onwards) can be switched. */
CG_API cg_status cg_gen_config_set_rule(cg_gen_config* cfg, cg_rule rule, int enabled);
CG_API cg_status cg_gen_config_set_subset_size(cg_gen_config* cfg, int max_size);

CG_API cg_status cg_generate(const cg_gen_config* cfg, cg_gen_result** out);
CG_API void cg_gen_result_free(cg_gen_result* r);
CG_API cg_gen_status cg_gen_result_status(const cg_gen_result* r);
CG_API size_t cg_gen_result_count(const cg_gen_result* r);
/* Graph i in key order; caller frees. */
CG_API cg_status cg_gen_result_graph(const cg_gen_result* r, size_t i, cg_graph** out);
CG_API uint64_t cg_gen_result_nodes_expanded(const cg_gen_result* r);
CG_API uint64_t cg_gen_result_pruned(const cg_gen_result* r, cg_rule rule);
/* Sorted canonical graph6 lines, then the summary block. */
CG_API cg_status cg_gen_result_text(const cg_gen_result* r, char* buf, size_t cap, size_t* needed);

/* ---- structure ---- */

/* Partition text, one "Z: ..", "R1: .." style line per set. */
CG_API cg_status cg_classify_c5(const cg_graph* g, const int cycle[5], char* buf, size_t cap, size_t* needed);
CG_API cg_status cg_classify_antihole7(const cg_graph* g, const int antihole[7], char* buf, size_t cap,
                                       size_t* needed);
/* *ok is 1 when no required claim fails; the text is the claim report. */
CG_API cg_status cg_check_c5_claims(const cg_graph* g, const int cycle[5], int* ok, char* buf, size_t cap,
                                    size_t* needed);
CG_API cg_status cg_check_antihole7_claims(const cg_graph* g, const int antihole[7], int* ok, char* buf,
                                           size_t cap, size_t* needed);
/* coloring receives order(g) colors in 1..4. */
CG_API cg_status cg_four_color_via_antihole(const cg_graph* g, const int antihole[7], int* coloring);
/* Grows core up to order vertices keeping it free of forbidden. */
CG_API cg_status cg_sample_class_member(const cg_graph* core, const cg_graph* const* forbidden, size_t count,
                                        int order, uint64_t seed, cg_graph** out);

#ifdef __cplusplus
}
#endif

#endif
