// Copyright 2026 The graphlet-lens Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "graphlet_lens/graphlet_lens.h"

#include <algorithm>
#include <memory>
#include <new>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphlet_lens/centrality.hpp"
#include "graphlet_lens/graph_core.hpp"
#include "graphlet_lens/ml.hpp"
#include "graphlet_lens/parallel.hpp"
#include "graphlet_lens/role_counter.hpp"
#include "graphlet_lens/stats.hpp"
#include "graphlet_lens/streaming_counter.hpp"
#include "graphlet_lens/transition_graph.hpp"
#include "graphlet_lens/triad_atlas.hpp"

struct gl_atlas {
  glens::TriadAtlas atlas;
};
struct gl_graph {
  glens::TemporalGraph graph;
};
struct gl_series {
  glens::GraphletCountSeries series;
};
struct gl_features {
  glens::FeatureTable table;
};
struct gl_scores {
  glens::CentralityScores scores;
};
struct gl_forest {
  glens::ForestModel model;
};

namespace {

thread_local std::string g_last_error;
thread_local std::size_t g_last_error_line = 0;

gl_status fail(gl_status status, const std::string& message, std::size_t line = 0) {
  g_last_error = message;
  g_last_error_line = line;
  return status;
}

template <class Fn>
gl_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return GL_OK;
  } catch (const glens::ParseError& e) {
    return fail(GL_ERR_PARSE, e.what(), e.line());
  } catch (const glens::UndefinedResult& e) {
    return fail(GL_ERR_UNDEFINED, e.what());
  } catch (const std::length_error& e) {
    return fail(GL_ERR_LIMIT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(GL_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(GL_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(GL_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GL_ERR_MEMORY, "out of memory");
  } catch (const std::runtime_error& e) {
    return fail(GL_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(GL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(GL_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

#define GL_REQUIRE_NOT_NULL(p) require((p) != nullptr, #p " must not be NULL")

void write_profile(const glens::SignificanceProfile& sp, gl_profile* out) {
  gl_profile p{};
  p.length = sp.observed.size();
  std::copy(sp.observed.begin(), sp.observed.end(), p.observed);
  std::copy(sp.random_mean.begin(), sp.random_mean.end(), p.random_mean);
  std::copy(sp.significance.begin(), sp.significance.end(), p.significance);
  std::copy(sp.profile.begin(), sp.profile.end(), p.profile);
  *out = p;
}

glens::ProfileOptions to_profile_options(const gl_profile_options* o) {
  glens::ProfileOptions p;
  if (o) {
    p.n_random = o->n_random;
    p.epsilon = o->epsilon;
    p.seed = o->seed;
    p.threads = o->threads;
  }
  return p;
}

glens::ForestOptions to_forest_options(const gl_forest_options* o) {
  glens::ForestOptions f;
  if (o) {
    f.n_trees = o->n_trees;
    f.max_depth = o->max_depth;
    f.min_samples_split = o->min_samples_split;
    if (o->max_features > 0) f.max_features = o->max_features;
    f.seed = o->seed;
    f.threads = o->threads;
  }
  return f;
}

gl_metrics to_c(const glens::Metrics& m) {
  return gl_metrics{m.f1, m.accuracy, m.auroc.value_or(0.0), m.auroc.has_value() ? 1 : 0};
}

glens::Subject to_subject(gl_subject s) {
  require(s == GL_SUBJECT_NODE || s == GL_SUBJECT_EDGE, "unknown subject kind");
  return s == GL_SUBJECT_NODE ? glens::Subject::kNode : glens::Subject::kEdge;
}

}  // namespace

extern "C" {

const char* gl_version(void) { return glens::kVersion; }
const char* gl_last_error(void) { return g_last_error.c_str(); }
size_t gl_last_error_line(void) { return g_last_error_line; }

const char* gl_status_name(gl_status status) {
  switch (status) {
    case GL_OK: return "ok";
    case GL_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GL_ERR_PARSE: return "parse error";
    case GL_ERR_IO: return "i/o error";
    case GL_ERR_UNDEFINED: return "undefined result";
    case GL_ERR_LIMIT: return "limit exceeded";
    case GL_ERR_MEMORY: return "out of memory";
    case GL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

int gl_default_thread_count(void) { return glens::default_thread_count(); }

// ---- atlas

gl_status gl_atlas_create(const char* numbering_path, gl_atlas** out) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(out);
    const auto numbering =
        numbering_path ? glens::load_numbering(numbering_path) : glens::AtlasNumbering{};
    *out = new gl_atlas{glens::TriadAtlas::build(numbering)};
  });
}

void gl_atlas_free(gl_atlas* atlas) { delete atlas; }

gl_status gl_atlas_graphlet(const gl_atlas* atlas, int id, gl_graphlet_info* out) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(atlas);
    GL_REQUIRE_NOT_NULL(out);
    require(id >= 1 && id <= glens::kNumGraphlets, "graphlet id out of range");
    const glens::GraphletId g(id);
    const auto rep = atlas->atlas.canonical_order()[g.index()];
    const auto& cls = atlas->atlas.classes()[atlas->atlas.class_of(rep.mask)];
    *out = gl_graphlet_info{id, rep.mask, rep.edge_count(), cls.automorphisms,
                            atlas->atlas.centers_in(g)};
  });
}

gl_status gl_atlas_node_orbit(const gl_atlas* atlas, int id, gl_orbit_info* out) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(atlas);
    GL_REQUIRE_NOT_NULL(out);
    require(id >= 1 && id <= glens::kNumNodeOrbits, "node orbit id out of range");
    for (const auto& o : atlas->atlas.node_orbits()) {
      if (o.id.value == id) *out = gl_orbit_info{id, o.graphlet.value, o.position, o.size};
    }
  });
}

gl_status gl_atlas_edge_orbit(const gl_atlas* atlas, int id, gl_orbit_info* out) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(atlas);
    GL_REQUIRE_NOT_NULL(out);
    require(id >= 1 && id <= glens::kNumEdgeOrbits, "edge orbit id out of range");
    for (const auto& o : atlas->atlas.edge_orbits()) {
      if (o.id.value == id) *out = gl_orbit_info{id, o.graphlet.value, o.slot, o.size};
    }
  });
}

gl_status gl_atlas_transition(const gl_atlas* atlas, int id, gl_transition_info* out) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(atlas);
    GL_REQUIRE_NOT_NULL(out);
    require(id >= 1 && id <= glens::kNumTransitions, "transition id out of range");
    const auto& t = atlas->atlas.transitions()[id - 1];
    const auto& src = atlas->atlas.classes()[t.source_class];
    *out = gl_transition_info{id, src.representative.mask,
                              t.source_graphlet ? t.source_graphlet->value : 0, t.target.value};
  });
}

gl_status gl_atlas_classify(const gl_atlas* atlas, uint8_t mask, int* out) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(atlas);
    GL_REQUIRE_NOT_NULL(out);
    const auto g = atlas->atlas.classify(glens::TriadCode{mask});
    *out = g ? g->value : 0;
  });
}

gl_status gl_atlas_node_orbit_of(const gl_atlas* atlas, uint8_t mask, int position, int* out) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(atlas);
    GL_REQUIRE_NOT_NULL(out);
    require(position >= 0 && position < 3, "position must be 0, 1 or 2");
    const auto o =
        atlas->atlas.node_orbit(glens::TriadCode{mask}, static_cast<glens::Position>(position));
    *out = o ? o->value : 0;
  });
}

gl_status gl_atlas_edge_orbit_of(const gl_atlas* atlas, uint8_t mask, int slot, int* out) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(atlas);
    GL_REQUIRE_NOT_NULL(out);
    const auto o = atlas->atlas.edge_orbit(glens::TriadCode{mask}, slot);
    *out = o ? o->value : 0;
  });
}

gl_status gl_atlas_transition_of(const gl_atlas* atlas, uint8_t mask, int added_slot, int* out) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(atlas);
    GL_REQUIRE_NOT_NULL(out);
    const auto t = atlas->atlas.transition(glens::TriadCode{mask}, added_slot);
    *out = t ? t->value : 0;
  });
}

// ---- graph

gl_status gl_graph_load(const char* path, gl_graph** out) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(path);
    GL_REQUIRE_NOT_NULL(out);
    *out = new gl_graph{glens::load_edge_list(path)};
  });
}

gl_status gl_graph_from_edges(const int64_t* src, const int64_t* dst, const int64_t* time,
                              size_t n, gl_graph** out) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(out);
    require(n == 0 || (src && dst && time), "edge arrays must not be NULL");
    std::vector<glens::RawEdge> raw(n);
    for (size_t i = 0; i < n; ++i) {
      require(src[i] >= 0 && dst[i] >= 0, "node ids must be non-negative");
      raw[i] = {src[i], dst[i], time[i]};
    }
    *out = new gl_graph{glens::TemporalGraph::from_raw(raw)};
  });
}

void gl_graph_free(gl_graph* graph) { delete graph; }
size_t gl_graph_node_count(const gl_graph* graph) { return graph ? graph->graph.node_count() : 0; }
size_t gl_graph_edge_count(const gl_graph* graph) { return graph ? graph->graph.edge_count() : 0; }

gl_status gl_graph_ingest_stats(const gl_graph* graph, gl_ingest_stats* out) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(graph);
    GL_REQUIRE_NOT_NULL(out);
    const auto& s = graph->graph.ingest_stats();
    *out = gl_ingest_stats{s.data_lines, s.self_loops, s.distinct_pairs};
  });
}

gl_status gl_graph_original_id(const gl_graph* graph, uint32_t node, int64_t* out) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(graph);
    GL_REQUIRE_NOT_NULL(out);
    *out = graph->graph.original_id(node);
  });
}

gl_status gl_graph_shuffle_times(const gl_graph* graph, uint64_t seed, gl_graph** out) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(graph);
    GL_REQUIRE_NOT_NULL(out);
    *out = new gl_graph{glens::shuffle_times(graph->graph, seed)};
  });
}

// ---- counts

gl_status gl_count_stream(const gl_graph* graph, const gl_atlas* atlas, size_t n_checkpoints,
                          gl_series** out) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(graph);
    GL_REQUIRE_NOT_NULL(atlas);
    GL_REQUIRE_NOT_NULL(out);
    *out = new gl_series{glens::count_stream(graph->graph, atlas->atlas, n_checkpoints)};
  });
}

void gl_series_free(gl_series* series) { delete series; }
size_t gl_series_size(const gl_series* series) {
  return series ? series->series.checkpoints.size() : 0;
}
uint64_t gl_series_neighbor_work(const gl_series* series) {
  return series ? series->series.neighbor_work : 0;
}

gl_status gl_series_checkpoint(const gl_series* series, size_t index, gl_checkpoint* out) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(series);
    GL_REQUIRE_NOT_NULL(out);
    const auto& c = series->series.checkpoints.at(index);
    gl_checkpoint cp{};
    cp.evolution_ratio = c.evolution_ratio;
    cp.edges_processed = c.edges_processed;
    std::copy(c.counts.begin(), c.counts.end(), cp.counts);
    std::copy(c.ratios.begin(), c.ratios.end(), cp.ratios);
    *out = cp;
  });
}

// ---- transitions and profiles

gl_status gl_compute_gtg(const gl_graph* graph, const gl_atlas* atlas,
                         uint64_t weights[GL_NUM_TRANSITIONS]) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(graph);
    GL_REQUIRE_NOT_NULL(atlas);
    GL_REQUIRE_NOT_NULL(weights);
    const auto gtg = glens::compute_gtg(graph->graph, atlas->atlas);
    std::copy(gtg.weights.begin(), gtg.weights.end(), weights);
  });
}

gl_status gl_transition_balance(const gl_atlas* atlas, const uint64_t weights[GL_NUM_TRANSITIONS],
                                int64_t births[GL_NUM_GRAPHLETS],
                                int64_t inbound[GL_NUM_GRAPHLETS],
                                int64_t outbound[GL_NUM_GRAPHLETS]) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(atlas);
    GL_REQUIRE_NOT_NULL(weights);
    require(births && inbound && outbound, "output arrays must not be NULL");
    glens::GraphletTransitionGraph gtg;
    std::copy(weights, weights + GL_NUM_TRANSITIONS, gtg.weights.begin());
    const auto b = glens::balance(gtg, atlas->atlas);
    std::copy(b.births.begin(), b.births.end(), births);
    std::copy(b.inbound.begin(), b.inbound.end(), inbound);
    std::copy(b.outbound.begin(), b.outbound.end(), outbound);
  });
}

void gl_profile_options_default(gl_profile_options* out) {
  if (out) *out = gl_profile_options{50, 4.0, 0, 0};
}

gl_status gl_compute_cp(const gl_graph* graph, const gl_atlas* atlas,
                        const gl_profile_options* options, gl_profile* out) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(graph);
    GL_REQUIRE_NOT_NULL(atlas);
    GL_REQUIRE_NOT_NULL(out);
    write_profile(glens::compute_cp(graph->graph, atlas->atlas, to_profile_options(options)), out);
  });
}

gl_status gl_cp_from_occurrences(const gl_graph* graph, const gl_atlas* atlas,
                                 const gl_profile_options* options, gl_null_model null_model,
                                 gl_profile* out) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(graph);
    GL_REQUIRE_NOT_NULL(atlas);
    GL_REQUIRE_NOT_NULL(out);
    require(null_model == GL_NULL_TIME_SHUFFLE || null_model == GL_NULL_DEGREE_PRESERVING,
            "unknown null model");
    const auto model = null_model == GL_NULL_TIME_SHUFFLE ? glens::NullModel::kTimeShuffle
                                                          : glens::NullModel::kDegreePreserving;
    write_profile(glens::cp_from_occurrences(graph->graph, atlas->atlas,
                                             to_profile_options(options), model),
                  out);
  });
}

gl_status gl_classify_by_threshold(const double* matrix, const char* const* labels, size_t n,
                                   double* threshold, double* accuracy) {
  return guarded([&] {
    require(matrix && labels && threshold && accuracy, "arguments must not be NULL");
    glens::SimilarityMatrix sim(n, std::vector<double>(n));
    std::vector<std::string> names(n);
    for (size_t i = 0; i < n; ++i) {
      require(labels[i] != nullptr, "label must not be NULL");
      names[i] = labels[i];
      for (size_t j = 0; j < n; ++j) sim[i][j] = matrix[i * n + j];
    }
    const auto r = glens::classify_by_threshold(sim, names);
    *threshold = r.threshold;
    *accuracy = r.accuracy;
  });
}

// ---- statistics

gl_status gl_pearson(const double* xs, const double* ys, size_t n, double* out) {
  return guarded([&] {
    require(xs && ys && out, "arguments must not be NULL");
    *out = glens::pearson({xs, n}, {ys, n});
  });
}

gl_status gl_spearman(const double* xs, const double* ys, size_t n, double* out) {
  return guarded([&] {
    require(xs && ys && out, "arguments must not be NULL");
    *out = glens::spearman({xs, n}, {ys, n});
  });
}

gl_status gl_nonlinearity(const double* xs, const double* ys, size_t n, size_t n_samples,
                          double* out) {
  return guarded([&] {
    require(xs && ys && out, "arguments must not be NULL");
    *out = glens::nonlinearity({xs, n}, {ys, n}, n_samples);
  });
}

// ---- features

gl_status gl_scan_features(const gl_graph* graph, const gl_atlas* atlas, int d_theta,
                           gl_subject subject, size_t refresh_interval, gl_features** out) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(graph);
    GL_REQUIRE_NOT_NULL(atlas);
    GL_REQUIRE_NOT_NULL(out);
    glens::ScanOptions options;
    options.d_theta = d_theta;
    options.subject = to_subject(subject);
    if (refresh_interval > 0) options.refresh_interval = refresh_interval;
    const auto events = glens::scan_threshold_events(graph->graph, atlas->atlas, options);
    *out = new gl_features{glens::feature_table(events, options.subject)};
  });
}

gl_status gl_features_create(const char* const* columns, size_t width, gl_features** out) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(out);
    require(width == 0 || columns, "columns must not be NULL");
    auto t = std::make_unique<gl_features>();
    for (size_t i = 0; i < width; ++i) {
      require(columns[i] != nullptr, "column name must not be NULL");
      t->table.columns.emplace_back(columns[i]);
    }
    *out = t.release();
  });
}

gl_status gl_features_append(gl_features* table, uint32_t subject_a, uint32_t subject_b,
                             const double* row, int label) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(table);
    require(table->table.width() == 0 || row, "row must not be NULL");
    table->table.append_row({subject_a, subject_b}, {row, table->table.width()}, label);
  });
}

void gl_features_free(gl_features* table) { delete table; }
size_t gl_features_rows(const gl_features* table) { return table ? table->table.rows() : 0; }
size_t gl_features_width(const gl_features* table) { return table ? table->table.width() : 0; }

const char* gl_features_column(const gl_features* table, size_t index) {
  if (!table || index >= table->table.width()) return nullptr;
  return table->table.columns[index].c_str();
}

gl_status gl_features_value(const gl_features* table, size_t row, size_t col, double* out) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(table);
    GL_REQUIRE_NOT_NULL(out);
    require(row < table->table.rows() && col < table->table.width(), "cell out of range");
    *out = table->table.at(row, col);
  });
}

gl_status gl_features_subject(const gl_features* table, size_t row, uint32_t* a, uint32_t* b) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(table);
    require(a && b, "outputs must not be NULL");
    const auto s = table->table.subjects.at(row);
    *a = s.first;
    *b = s.second;
  });
}

gl_status gl_features_label(const gl_features* table, size_t row, int* out) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(table);
    GL_REQUIRE_NOT_NULL(out);
    *out = table->table.labels.at(row);
  });
}

gl_status gl_features_set_label(gl_features* table, size_t row, int label) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(table);
    require(label == 0 || label == 1, "label must be 0 or 1");
    table->table.labels.at(row) = label;
  });
}

gl_status gl_features_select(const gl_features* table, const char* sets, gl_subject subject,
                             gl_features** out) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(table);
    GL_REQUIRE_NOT_NULL(sets);
    GL_REQUIRE_NOT_NULL(out);
    std::vector<std::string> columns;
    std::stringstream ss(sets);
    std::string name;
    while (std::getline(ss, name, ',')) {
      name.erase(0, name.find_first_not_of(" \t"));
      name.erase(name.find_last_not_of(" \t") + 1);
      if (name.empty()) continue;
      for (auto& c : glens::feature_set_columns(name, to_subject(subject))) {
        if (std::find(columns.begin(), columns.end(), c) == columns.end()) columns.push_back(c);
      }
    }
    require(!columns.empty(), "no feature set named");
    *out = new gl_features{table->table.select_columns(columns)};
  });
}

gl_status gl_split_train_test(const gl_features* table, double train_fraction, uint64_t seed,
                              gl_features** train, gl_features** test) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(table);
    require(train && test, "outputs must not be NULL");
    auto [a, b] = glens::split_train_test(table->table, train_fraction, seed);
    auto ta = std::make_unique<gl_features>(gl_features{std::move(a)});
    auto tb = std::make_unique<gl_features>(gl_features{std::move(b)});
    *train = ta.release();
    *test = tb.release();
  });
}

// ---- centrality

gl_status gl_centrality(const gl_graph* graph, gl_measure measure, int threads,
                        size_t max_nodes, gl_scores** out) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(graph);
    GL_REQUIRE_NOT_NULL(out);
    require(measure >= GL_MEASURE_IN_DEGREE && measure <= GL_MEASURE_EDGE_BETWEENNESS,
            "unknown measure");
    glens::CentralityOptions options;
    options.threads = threads > 0 ? threads : glens::default_thread_count();
    if (max_nodes > 0) options.max_nodes = max_nodes;
    const auto state = glens::replay(graph->graph);
    *out = new gl_scores{
        glens::compute_centrality(state, static_cast<glens::Measure>(measure), options)};
  });
}

gl_status gl_parse_measure(const char* name, gl_measure* out) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(name);
    GL_REQUIRE_NOT_NULL(out);
    const auto m = glens::parse_measure(name);
    require(m.has_value(), "unknown centrality measure");
    *out = static_cast<gl_measure>(*m);
  });
}

void gl_scores_free(gl_scores* scores) { delete scores; }
size_t gl_scores_size(const gl_scores* scores) {
  return scores ? scores->scores.values.size() : 0;
}

gl_status gl_scores_value(const gl_scores* scores, size_t index, double* out) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(scores);
    GL_REQUIRE_NOT_NULL(out);
    *out = scores->scores.values.at(index);
  });
}

gl_status gl_scores_subject(const gl_scores* scores, size_t index, uint32_t* a, uint32_t* b) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(scores);
    require(a && b, "outputs must not be NULL");
    require(index < scores->scores.values.size(), "score index out of range");
    if (scores->scores.edges.empty()) {
      *a = *b = static_cast<uint32_t>(index);
    } else {
      *a = scores->scores.edges[index].first;
      *b = scores->scores.edges[index].second;
    }
  });
}

gl_status gl_scores_top_labels(const gl_scores* scores, double fraction, int* labels) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(scores);
    GL_REQUIRE_NOT_NULL(labels);
    const auto top = glens::label_top_fraction(scores->scores.values, fraction);
    for (size_t i = 0; i < top.size(); ++i) labels[i] = top[i] ? 1 : 0;
  });
}

gl_status gl_scores_groups(const gl_scores* scores, int* groups) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(scores);
    GL_REQUIRE_NOT_NULL(groups);
    const auto g = glens::bin_six_groups(scores->scores.values);
    std::copy(g.begin(), g.end(), groups);
  });
}

gl_status gl_features_label_by_scores(gl_features* table, const gl_scores* scores,
                                      double fraction) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(table);
    GL_REQUIRE_NOT_NULL(scores);
    glens::label_rows(table->table, scores->scores, fraction);
  });
}

gl_status gl_features_groups(const gl_features* table, const gl_scores* scores, int* groups) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(table);
    GL_REQUIRE_NOT_NULL(scores);
    GL_REQUIRE_NOT_NULL(groups);
    const auto g = glens::row_groups(table->table, scores->scores);
    std::copy(g.begin(), g.end(), groups);
  });
}

gl_status gl_role_signals(const gl_features* table, const int* groups,
                          double signals[GL_NUM_ROLES], int present[GL_NUM_ROLES]) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(table);
    require(groups || table->table.rows() == 0, "groups must not be NULL");
    require(signals && present, "outputs must not be NULL");
    const auto s = glens::role_signals(table->table, {groups, table->table.rows()});
    for (int i = 0; i < GL_NUM_ROLES; ++i) {
      signals[i] = s[i].value_or(0.0);
      present[i] = s[i].has_value() ? 1 : 0;
    }
  });
}

// ---- forest

void gl_forest_options_default(gl_forest_options* out) {
  if (out) *out = gl_forest_options{30, 10, 2, 0, 0, 0};
}

gl_status gl_forest_train(const gl_features* train, const gl_forest_options* options,
                          gl_forest** out) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(train);
    GL_REQUIRE_NOT_NULL(out);
    *out = new gl_forest{glens::train_forest(train->table, to_forest_options(options))};
  });
}

void gl_forest_free(gl_forest* forest) { delete forest; }
size_t gl_forest_width(const gl_forest* forest) {
  return forest ? forest->model.columns.size() : 0;
}

gl_status gl_forest_predict(const gl_forest* forest, const gl_features* table, double* probs) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(forest);
    GL_REQUIRE_NOT_NULL(table);
    require(probs || table->table.rows() == 0, "probs must not be NULL");
    const auto p = forest->model.predict_proba(table->table);
    std::copy(p.begin(), p.end(), probs);
  });
}

gl_status gl_forest_importance(const gl_forest* forest, double* importance) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(forest);
    GL_REQUIRE_NOT_NULL(importance);
    const auto imp = glens::gini_importance(forest->model);
    std::copy(imp.begin(), imp.end(), importance);
  });
}

gl_status gl_evaluate(const gl_forest* forest, const gl_features* test, gl_metrics* out) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(forest);
    GL_REQUIRE_NOT_NULL(test);
    GL_REQUIRE_NOT_NULL(out);
    *out = to_c(glens::evaluate(forest->model, test->table));
  });
}

gl_status gl_score_predictions(const double* probs, const int* labels, size_t n,
                               gl_metrics* out) {
  return guarded([&] {
    require(probs && labels && out, "arguments must not be NULL");
    *out = to_c(glens::score_predictions({probs, n}, {labels, n}));
  });
}

gl_status gl_repeated_evaluation(const gl_features* table, const gl_forest_options* options,
                                 int repeats, double train_fraction, gl_metrics* mean,
                                 gl_metrics* stddev) {
  return guarded([&] {
    GL_REQUIRE_NOT_NULL(table);
    require(mean && stddev, "outputs must not be NULL");
    const auto r = glens::repeated_evaluation(table->table, to_forest_options(options), repeats,
                                              train_fraction);
    *mean = to_c(r.mean);
    *stddev = to_c(r.stddev);
  });
}

}  // extern "C"
