#ifndef DRCEC_DRCEC_H
#define DRCEC_DRCEC_H

/*
 * C interface to the diversity-regularized categorical edge clustering
 * library. Objects are opaque handles released with the matching *_free
 * function. Every fallible call returns a drcec_status; on failure a
 * description is available from drcec_last_error() on the same thread.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(DRCEC_BUILDING_LIBRARY)
#define DRCEC_API __attribute__((visibility("default")))
#else
#define DRCEC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values match the CLI exit codes. */
typedef enum drcec_status {
  DRCEC_OK = 0,
  DRCEC_ERR_INTERNAL = 1,
  DRCEC_ERR_INPUT = 2,
  DRCEC_ERR_BUDGET = 3,
  DRCEC_ERR_NUMERICAL = 4
} drcec_status;

typedef enum drcec_method {
  DRCEC_METHOD_LP_ROUND = 0,
  DRCEC_METHOD_EXACT = 1,
  DRCEC_METHOD_MINORITY = 2,
  DRCEC_METHOD_MAJORITY = 3
} drcec_method;

typedef struct drcec_hypergraph drcec_hypergraph;
typedef struct drcec_trace drcec_trace;

typedef struct drcec_objective {
  size_t edge_cost;
  size_t experience_penalty;
  double beta;
  double total;
} drcec_objective;

typedef struct drcec_cluster_options {
  double beta;
  int randomized_ties; /* nonzero: seeded random tie-breaking */
  uint64_t seed;
  size_t node_cap;          /* exact method only; 0 selects the default */
  uint64_t max_evaluations; /* exact method only; 0 selects the default */
} drcec_cluster_options;

typedef struct drcec_clustering_metrics {
  double edge_satisfaction; /* NaN when the hypergraph has no edges */
  double f_within;
  double f_within_normalized;
} drcec_clustering_metrics;

typedef struct drcec_color_stats {
  size_t size;
  long diversity;
  long experience;
  double homogeneity;
} drcec_color_stats;

typedef struct drcec_beta_hat_result {
  double beta0;
  double theta_plus;
  double beta_hat;
  int clamped;
  int unique_minority;
  double aux_dual_residual;
  double aux_equality_residual;
  double epsilon;
  double above_residual;
  double below_drop; /* NaN when the below-side check does not apply */
  int verified;
} drcec_beta_hat_result;

typedef struct drcec_interval {
  double beta_lo;
  double beta_hi; /* +inf when unbounded */
  int lo_clamped;
  int hi_unbounded;
} drcec_interval;

typedef struct drcec_dynamics_config {
  double beta;
  size_t window;
  size_t steps;
  long warm_start; /* negative selects the default (window) */
  drcec_method method;
  uint64_t seed;
  size_t node_cap;
  uint64_t max_evaluations;
} drcec_dynamics_config;

typedef struct drcec_step_info {
  size_t exchanges;
  size_t edge_cost;
  size_t experience_penalty;
  double total;
  double mean_uniformity_gap;
} drcec_step_info;

DRCEC_API const char* drcec_last_error(void);
DRCEC_API const char* drcec_version(void);

DRCEC_API void drcec_cluster_options_init(drcec_cluster_options* opts);
DRCEC_API void drcec_dynamics_config_init(drcec_dynamics_config* cfg);
/* Accepts "lp-round", "exact", "minority", "majority". */
DRCEC_API drcec_status drcec_method_from_name(const char* name, drcec_method* out);

/* Hypergraphs */
DRCEC_API drcec_status drcec_hypergraph_parse(const char* text, size_t len,
                                              drcec_hypergraph** out);
DRCEC_API drcec_status drcec_hypergraph_load(const char* path, drcec_hypergraph** out);
DRCEC_API void drcec_hypergraph_free(drcec_hypergraph* h);
DRCEC_API size_t drcec_hypergraph_num_nodes(const drcec_hypergraph* h);
DRCEC_API size_t drcec_hypergraph_num_colors(const drcec_hypergraph* h);
DRCEC_API size_t drcec_hypergraph_num_edges(const drcec_hypergraph* h);
DRCEC_API int drcec_hypergraph_d_max(const drcec_hypergraph* h);
DRCEC_API const char* drcec_hypergraph_color_name(const drcec_hypergraph* h, size_t color);
/* Writes num_colors() counts to `out`. */
DRCEC_API drcec_status drcec_hypergraph_color_degrees(const drcec_hypergraph* h, size_t node,
                                                      int* out, size_t out_len);

/* Clustering. `assignment` buffers hold num_nodes() color indices. */
DRCEC_API drcec_status drcec_cluster(const drcec_hypergraph* h, drcec_method method,
                                     const drcec_cluster_options* opts, uint32_t* assignment,
                                     drcec_objective* objective, double* lp_value);
DRCEC_API drcec_status drcec_evaluate(const drcec_hypergraph* h, const uint32_t* assignment,
                                      double beta, drcec_objective* objective);
DRCEC_API drcec_status drcec_metrics(const drcec_hypergraph* h, const uint32_t* assignment,
                                     drcec_clustering_metrics* out);
DRCEC_API drcec_status drcec_color_statistics(const drcec_hypergraph* h,
                                              const uint32_t* assignment, size_t color,
                                              drcec_color_stats* out);
DRCEC_API drcec_status drcec_parse_clustering(const drcec_hypergraph* h, const char* text,
                                              size_t len, uint32_t* assignment);
/* Returned strings are released with drcec_string_free. */
DRCEC_API drcec_status drcec_format_clustering(const drcec_hypergraph* h,
                                               const uint32_t* assignment, char** out);
DRCEC_API drcec_status drcec_dump_lp(const drcec_hypergraph* h, double beta, char** out);
DRCEC_API void drcec_string_free(char* s);

/* Regularization thresholds. `beta0` <= 0 or NaN selects d_max + 1. */
DRCEC_API drcec_status drcec_beta_hat(const drcec_hypergraph* h, double beta0,
                                      drcec_beta_hat_result* out);
DRCEC_API drcec_status drcec_stability_interval(const drcec_hypergraph* h, double beta,
                                                drcec_interval* out);

/* Dynamics */
DRCEC_API drcec_status drcec_dynamics_run(const drcec_hypergraph* h,
                                          const drcec_dynamics_config* cfg, drcec_trace** out);
DRCEC_API void drcec_trace_free(drcec_trace* t);
DRCEC_API size_t drcec_trace_num_steps(const drcec_trace* t);
/* `step` is 1-based. */
DRCEC_API drcec_status drcec_trace_step(const drcec_trace* t, size_t step, drcec_step_info* out);
DRCEC_API drcec_status drcec_trace_assignment(const drcec_trace* t, size_t step,
                                              uint32_t* assignment);
DRCEC_API drcec_status drcec_trace_mean_exchanges(const drcec_trace* t, double* out);

#ifdef __cplusplus
}
#endif

#endif /* DRCEC_DRCEC_H */
