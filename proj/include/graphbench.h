/* graphbench C API: failure-free synthetic graph generation, the eight core
 * graph kernels, dataset statistics, and the benchmark harness, behind opaque
 * handles and status codes.
 *
 * Every function that can fail returns gb_status; gb_last_error() carries the
 * most recent message for the calling thread. Strings returned through char**
 * are heap-allocated and must be released with gb_string_free(); handles have
 * their own *_free functions.
 */
#ifndef GRAPHBENCH_H
#define GRAPHBENCH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gb_status {
    GB_OK = 0,
    GB_ERROR_INVALID_ARGUMENT = 1,
    GB_ERROR_IO = 2,
    GB_ERROR_PARSE = 3,
    GB_ERROR_NOMEM = 4,
    GB_ERROR_INTERNAL = 5
} gb_status;

typedef enum gb_format { GB_FORMAT_TEXT = 0, GB_FORMAT_BINARY = 1 } gb_format;

typedef enum gb_degree_kind { GB_DEGREE_CONSTANT = 0, GB_DEGREE_POWER_LAW = 1 } gb_degree_kind;

typedef struct gb_edgelist gb_edgelist;
typedef struct gb_graph gb_graph;
typedef struct gb_result gb_result;

const char* gb_version(void);
/* Thread-local; valid until the next failing call on the same thread. */
const char* gb_last_error(void);
void gb_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Generation                                                          */

typedef struct gb_gen_config {
    uint64_t n;
    double alpha;                /* density factor, >= 1 */
    uint64_t target_diameter;    /* 0 = no diameter grouping */
    int32_t group_diameter_const;
    int32_t degree_kind;         /* gb_degree_kind */
    uint64_t degree_constant;
    double degree_exponent;
    uint64_t degree_min;
    uint64_t degree_max;         /* 0 = n / 100 */
    uint64_t seed;
    int32_t random_weights;      /* uniform (0,1] edge weights */
    int32_t threads;             /* 1 = deterministic reference mode */
} gb_gen_config;

typedef struct gb_ldbc_config {
    uint64_t n;
    double p;
    double p_limit;
    int32_t degree_kind;
    uint64_t degree_constant;
    double degree_exponent;
    uint64_t degree_min;
    uint64_t degree_max;
    uint64_t seed;
} gb_ldbc_config;

void gb_gen_config_init(gb_gen_config* config);
void gb_ldbc_config_init(gb_ldbc_config* config);

/* report_json (optional) receives {"trials","edges","wall_time_s",
 * "trials_per_edge","warnings"}. */
gb_status gb_generate(const gb_gen_config* config, gb_edgelist** out, char** report_json);
gb_status gb_generate_ldbc(const gb_ldbc_config* config, gb_edgelist** out, char** report_json);

/* ------------------------------------------------------------------ */
/* Edge lists and graphs                                               */

gb_status gb_edgelist_read(const char* path, gb_format format, gb_edgelist** out);
gb_status gb_edgelist_write(const gb_edgelist* edges, const char* path, gb_format format);
uint64_t gb_edgelist_num_vertices(const gb_edgelist* edges);
uint64_t gb_edgelist_num_edges(const gb_edgelist* edges);
void gb_edgelist_free(gb_edgelist* edges);

gb_status gb_graph_build(const gb_edgelist* edges, gb_graph** out);
uint64_t gb_graph_num_vertices(const gb_graph* graph);
uint64_t gb_graph_num_edges(const gb_graph* graph);
void gb_graph_free(gb_graph* graph);

/* "S8-Std" style name from n + m; variant is "Std", "Dense" or "Diam". */
gb_status gb_dataset_name(uint64_t n, uint64_t m, const char* variant, char* buffer, size_t size);

/* ------------------------------------------------------------------ */
/* Kernels                                                             */

typedef struct gb_kernel_params {
    int32_t max_iters; /* PR, LPA */
    uint64_t source;   /* SSSP, BC */
    int32_t k;         /* KC */
    double damping;    /* PR */
} gb_kernel_params;

void gb_kernel_params_init(gb_kernel_params* params);

/* kernel is one of pr, lpa, sssp, wcc, bc, cd, tc, kc. */
gb_status gb_run_kernel(const gb_graph* graph, const char* kernel, const gb_kernel_params* params,
                        int32_t threads, gb_result** out);
int32_t gb_result_has_scalar(const gb_result* result);
uint64_t gb_result_scalar(const gb_result* result);
uint64_t gb_result_size(const gb_result* result);
const double* gb_result_values(const gb_result* result);
/* One value per line in vertex order; scalars as a single line. */
gb_status gb_result_write(const gb_result* result, const char* path);
void gb_result_free(gb_result* result);

/* ------------------------------------------------------------------ */
/* Statistics                                                          */

gb_status gb_graph_stats(const gb_graph* graph, char** json);

/* assignment: one community id per vertex (length = vertex count).
 * bridge_def: "bridges" (default when NULL) or "cutfraction".
 * as_csv nonzero emits the per-community CSV instead of JSON. */
gb_status gb_community_stats(const gb_graph* graph, const uint64_t* assignment, uint64_t length,
                             const char* bridge_def, int32_t as_csv, char** out);

/* method: "lpa" (default when NULL) or "wcc". Six JSD metrics keyed CC, TPR,
 * BR, Diam, Cond, Size. */
gb_status gb_similarity_report(const gb_graph* a, const gb_graph* b, const char* method,
                               char** json);

/* ------------------------------------------------------------------ */
/* Benchmarks                                                          */

gb_status gb_bench_run(const char* graph_path, gb_format format, const char* kernel,
                       const gb_kernel_params* params, int32_t threads, int32_t repeats,
                       const char* dataset_label, const char* result_path, char** report_json);

/* explicit_counts nonzero runs the exact list (oversubscription allowed);
 * zero truncates to the hardware's logical cores. */
gb_status gb_bench_speedup(const char* graph_path, gb_format format, const char* kernel,
                           const gb_kernel_params* params, const int32_t* thread_counts,
                           uint64_t num_counts, int32_t explicit_counts, int32_t repeats,
                           char** table_json);

/* Ladder file: one rung per line, file=PATH or generator key=value pairs.
 * mem_cap_bytes 0 defers to GRAPHBENCH_MEM_CAP. Returns one JSON object per
 * line, one per rung. */
gb_status gb_bench_stress(const char* kernel, const gb_kernel_params* params,
                          const char* ladder_path, int32_t threads, uint64_t mem_cap_bytes,
                          double timeout_s, char** rows_json_lines);

/* Full kernel x dataset grid; as_csv nonzero emits the flat CSV table. */
gb_status gb_bench_impact(const char* const* kernels, uint64_t num_kernels,
                          const char* const* labels, const char* const* paths, uint64_t num_graphs,
                          const gb_kernel_params* params, int32_t threads, int32_t repeats,
                          int32_t as_csv, char** out);

#ifdef __cplusplus
}
#endif

#endif /* GRAPHBENCH_H */
