/* Copyright 2026 The graphlet-lens Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to libgraphlet_lens.
 *
 * Objects are opaque handles released with the matching *_free function
 * (which accepts NULL). Every fallible call returns a gl_status; on failure
 * gl_last_error() describes the problem until the next failing call on the
 * same thread. Output pointers are written only on success. Handles are
 * immutable after creation unless a function says otherwise, and may be
 * shared across threads.
 */

#ifndef GRAPHLET_LENS_H_
#define GRAPHLET_LENS_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(GRAPHLET_LENS_BUILDING)
#define GL_API __declspec(dllexport)
#else
#define GL_API __declspec(dllimport)
#endif
#else
#define GL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gl_status {
  GL_OK = 0,
  GL_ERR_INVALID_ARGUMENT = 1,
  GL_ERR_PARSE = 2,
  GL_ERR_IO = 3,
  GL_ERR_UNDEFINED = 4, /* statistic has no value for this input */
  GL_ERR_LIMIT = 5,     /* input exceeds a configured bound */
  GL_ERR_MEMORY = 6,
  GL_ERR_INTERNAL = 7
} gl_status;

enum {
  GL_NUM_GRAPHLETS = 13,
  GL_NUM_NODE_ORBITS = 30,
  GL_NUM_EDGE_ORBITS = 30,
  GL_NUM_TRANSITIONS = 28,
  GL_NUM_ROLES = 30,
  GL_MAX_PROFILE = 28
};

GL_API const char* gl_version(void);
GL_API const char* gl_last_error(void);
/* Input line of the last GL_ERR_PARSE, 0 if not tied to a line. */
GL_API size_t gl_last_error_line(void);
GL_API const char* gl_status_name(gl_status status);
/* GRAPHLET_LENS_THREADS if set, else the hardware concurrency. */
GL_API int gl_default_thread_count(void);

/* ---- atlas ------------------------------------------------------------ */

typedef struct gl_atlas gl_atlas;

typedef struct gl_graphlet_info {
  int id;
  uint8_t representative; /* 6-bit triad code */
  int edges;
  int automorphisms;
  int centers; /* nodes adjacent to both others: 1 or 3 */
} gl_graphlet_info;

typedef struct gl_orbit_info {
  int id;
  int graphlet;
  int member; /* smallest position (node orbits) or slot (edge orbits) */
  int size;
} gl_orbit_info;

typedef struct gl_transition_info {
  int id;
  uint8_t source_representative;
  int source_graphlet; /* 0 for a one-dyad source */
  int target;
} gl_transition_info;

/* numbering_path may be NULL for the canonical numbering. */
GL_API gl_status gl_atlas_create(const char* numbering_path, gl_atlas** out);
GL_API void gl_atlas_free(gl_atlas* atlas);
GL_API gl_status gl_atlas_graphlet(const gl_atlas* atlas, int id, gl_graphlet_info* out);
GL_API gl_status gl_atlas_node_orbit(const gl_atlas* atlas, int id, gl_orbit_info* out);
GL_API gl_status gl_atlas_edge_orbit(const gl_atlas* atlas, int id, gl_orbit_info* out);
GL_API gl_status gl_atlas_transition(const gl_atlas* atlas, int id, gl_transition_info* out);
/* Table lookups; *out = 0 when undefined. */
GL_API gl_status gl_atlas_classify(const gl_atlas* atlas, uint8_t mask, int* out);
GL_API gl_status gl_atlas_node_orbit_of(const gl_atlas* atlas, uint8_t mask, int position,
                                        int* out);
GL_API gl_status gl_atlas_edge_orbit_of(const gl_atlas* atlas, uint8_t mask, int slot, int* out);
GL_API gl_status gl_atlas_transition_of(const gl_atlas* atlas, uint8_t mask, int added_slot,
                                        int* out);

/* ---- temporal graph ---------------------------------------------------- */

typedef struct gl_graph gl_graph;

typedef struct gl_ingest_stats {
  size_t data_lines;
  size_t self_loops;
  size_t distinct_pairs;
} gl_ingest_stats;

GL_API gl_status gl_graph_load(const char* path, gl_graph** out);
/* Raw ids are compacted; self-loops dropped; edges stably sorted by time. */
GL_API gl_status gl_graph_from_edges(const int64_t* src, const int64_t* dst,
                                     const int64_t* time, size_t n, gl_graph** out);
GL_API void gl_graph_free(gl_graph* graph);
GL_API size_t gl_graph_node_count(const gl_graph* graph);
GL_API size_t gl_graph_edge_count(const gl_graph* graph);
GL_API gl_status gl_graph_ingest_stats(const gl_graph* graph, gl_ingest_stats* out);
GL_API gl_status gl_graph_original_id(const gl_graph* graph, uint32_t node, int64_t* out);
GL_API gl_status gl_graph_shuffle_times(const gl_graph* graph, uint64_t seed, gl_graph** out);

/* ---- streaming counts -------------------------------------------------- */

typedef struct gl_series gl_series;

typedef struct gl_checkpoint {
  double evolution_ratio;
  size_t edges_processed;
  int64_t counts[GL_NUM_GRAPHLETS];
  double ratios[GL_NUM_GRAPHLETS];
} gl_checkpoint;

GL_API gl_status gl_count_stream(const gl_graph* graph, const gl_atlas* atlas,
                                 size_t n_checkpoints, gl_series** out);
GL_API void gl_series_free(gl_series* series);
GL_API size_t gl_series_size(const gl_series* series);
GL_API uint64_t gl_series_neighbor_work(const gl_series* series);
GL_API gl_status gl_series_checkpoint(const gl_series* series, size_t index, gl_checkpoint* out);

/* ---- transitions and profiles ------------------------------------------ */

GL_API gl_status gl_compute_gtg(const gl_graph* graph, const gl_atlas* atlas,
                                uint64_t weights[GL_NUM_TRANSITIONS]);
/* births + inbound - outbound equals the final census. */
GL_API gl_status gl_transition_balance(const gl_atlas* atlas,
                                       const uint64_t weights[GL_NUM_TRANSITIONS],
                                       int64_t births[GL_NUM_GRAPHLETS],
                                       int64_t inbound[GL_NUM_GRAPHLETS],
                                       int64_t outbound[GL_NUM_GRAPHLETS]);

typedef struct gl_profile_options {
  int n_random;
  double epsilon;
  uint64_t seed;
  int threads; /* <= 0: gl_default_thread_count() */
} gl_profile_options;

typedef struct gl_profile {
  size_t length; /* 28 for transition profiles, 13 for occurrence profiles */
  double observed[GL_MAX_PROFILE];
  double random_mean[GL_MAX_PROFILE];
  double significance[GL_MAX_PROFILE];
  double profile[GL_MAX_PROFILE];
} gl_profile;

typedef enum gl_null_model { GL_NULL_TIME_SHUFFLE = 0, GL_NULL_DEGREE_PRESERVING = 1 } gl_null_model;

/* n_random 50, epsilon 4, seed 0, threads 0. */
GL_API void gl_profile_options_default(gl_profile_options* out);
GL_API gl_status gl_compute_cp(const gl_graph* graph, const gl_atlas* atlas,
                               const gl_profile_options* options, gl_profile* out);
GL_API gl_status gl_cp_from_occurrences(const gl_graph* graph, const gl_atlas* atlas,
                                        const gl_profile_options* options,
                                        gl_null_model null_model, gl_profile* out);
/* matrix is n x n row-major; labels holds n strings. */
GL_API gl_status gl_classify_by_threshold(const double* matrix, const char* const* labels,
                                          size_t n, double* threshold, double* accuracy);

/* ---- statistics -------------------------------------------------------- */

GL_API gl_status gl_pearson(const double* xs, const double* ys, size_t n, double* out);
GL_API gl_status gl_spearman(const double* xs, const double* ys, size_t n, double* out);
GL_API gl_status gl_nonlinearity(const double* xs, const double* ys, size_t n,
                                 size_t n_samples, double* out);

/* ---- features ---------------------------------------------------------- */

typedef enum gl_subject { GL_SUBJECT_NODE = 0, GL_SUBJECT_EDGE = 1 } gl_subject;

typedef struct gl_features gl_features;

/* One row per threshold event, columns as described in the README. */
GL_API gl_status gl_scan_features(const gl_graph* graph, const gl_atlas* atlas, int d_theta,
                                  gl_subject subject, size_t refresh_interval,
                                  gl_features** out);
/* Empty table with the given schema, filled by gl_features_append. */
GL_API gl_status gl_features_create(const char* const* columns, size_t width,
                                    gl_features** out);
GL_API gl_status gl_features_append(gl_features* table, uint32_t subject_a, uint32_t subject_b,
                                    const double* row, int label);
GL_API void gl_features_free(gl_features* table);
GL_API size_t gl_features_rows(const gl_features* table);
GL_API size_t gl_features_width(const gl_features* table);
/* Borrowed; valid while the table lives. NULL when out of range. */
GL_API const char* gl_features_column(const gl_features* table, size_t index);
GL_API gl_status gl_features_value(const gl_features* table, size_t row, size_t col, double* out);
GL_API gl_status gl_features_subject(const gl_features* table, size_t row, uint32_t* a,
                                     uint32_t* b);
GL_API gl_status gl_features_label(const gl_features* table, size_t row, int* out);
GL_API gl_status gl_features_set_label(gl_features* table, size_t row, int label);
/* sets: comma-separated feature-set names (e.g. "all" or "local-nr,local-npp"). */
GL_API gl_status gl_features_select(const gl_features* table, const char* sets,
                                    gl_subject subject, gl_features** out);
GL_API gl_status gl_split_train_test(const gl_features* table, double train_fraction,
                                     uint64_t seed, gl_features** train, gl_features** test);

/* ---- centrality -------------------------------------------------------- */

typedef enum gl_measure {
  GL_MEASURE_IN_DEGREE = 0,
  GL_MEASURE_BETWEENNESS = 1,
  GL_MEASURE_CLOSENESS = 2,
  GL_MEASURE_PAGERANK = 3,
  GL_MEASURE_EDGE_BETWEENNESS = 4
} gl_measure;

typedef struct gl_scores gl_scores;

/* On the final snapshot. max_nodes == 0 keeps the default bound. */
GL_API gl_status gl_centrality(const gl_graph* graph, gl_measure measure, int threads,
                               size_t max_nodes, gl_scores** out);
GL_API gl_status gl_parse_measure(const char* name, gl_measure* out);
GL_API void gl_scores_free(gl_scores* scores);
GL_API size_t gl_scores_size(const gl_scores* scores);
GL_API gl_status gl_scores_value(const gl_scores* scores, size_t index, double* out);
/* Subject of a score: node (a == b) or edge a->b. */
GL_API gl_status gl_scores_subject(const gl_scores* scores, size_t index, uint32_t* a,
                                   uint32_t* b);
/* labels and groups hold gl_scores_size() entries. */
GL_API gl_status gl_scores_top_labels(const gl_scores* scores, double fraction, int* labels);
GL_API gl_status gl_scores_groups(const gl_scores* scores, int* groups);
GL_API gl_status gl_features_label_by_scores(gl_features* table, const gl_scores* scores,
                                             double fraction);
/* groups holds gl_features_rows() entries. */
GL_API gl_status gl_features_groups(const gl_features* table, const gl_scores* scores,
                                    int* groups);
/* present[i] is 0 where the signal is undefined. */
GL_API gl_status gl_role_signals(const gl_features* table, const int* groups,
                                 double signals[GL_NUM_ROLES], int present[GL_NUM_ROLES]);

/* ---- random forest ----------------------------------------------------- */

typedef struct gl_forest gl_forest;

typedef struct gl_forest_options {
  int n_trees;
  int max_depth;
  int min_samples_split;
  int max_features; /* <= 0: ceil(sqrt(width)) */
  uint64_t seed;
  int threads; /* <= 0: gl_default_thread_count() */
} gl_forest_options;

typedef struct gl_metrics {
  double f1;
  double accuracy;
  double auroc;
  int has_auroc;
} gl_metrics;

/* 30 trees, depth 10, min split 2, sqrt features, seed 0, threads 0. */
GL_API void gl_forest_options_default(gl_forest_options* out);
GL_API gl_status gl_forest_train(const gl_features* train, const gl_forest_options* options,
                                 gl_forest** out);
GL_API void gl_forest_free(gl_forest* forest);
GL_API size_t gl_forest_width(const gl_forest* forest);
/* probs holds gl_features_rows(table) entries. */
GL_API gl_status gl_forest_predict(const gl_forest* forest, const gl_features* table,
                                   double* probs);
/* importance holds gl_forest_width() entries. */
GL_API gl_status gl_forest_importance(const gl_forest* forest, double* importance);
GL_API gl_status gl_evaluate(const gl_forest* forest, const gl_features* test, gl_metrics* out);
GL_API gl_status gl_score_predictions(const double* probs, const int* labels, size_t n,
                                      gl_metrics* out);
GL_API gl_status gl_repeated_evaluation(const gl_features* table,
                                        const gl_forest_options* options, int repeats,
                                        double train_fraction, gl_metrics* mean,
                                        gl_metrics* stddev);

#ifdef __cplusplus
}
#endif

#endif /* GRAPHLET_LENS_H_ */
