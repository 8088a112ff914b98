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

// Random-forest classification of early-stage features against future
// centrality labels, plus the glue that turns threshold events into tables.

#ifndef GRAPHLET_LENS_ML_HPP_
#define GRAPHLET_LENS_ML_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphlet_lens/centrality.hpp"
#include "graphlet_lens/role_counter.hpp"

namespace glens {

/// Dense row-major table with named columns and 0/1 labels.
struct FeatureTable {
  std::vector<std::string> columns;
  std::vector<double> values;  // rows() * width()
  std::vector<int> labels;     // empty until labelled
  /// Subject of each row: node id in `first`, or the edge (first, second).
  std::vector<std::pair<NodeId, NodeId>> subjects;

  std::size_t rows() const { return subjects.size(); }
  std::size_t width() const { return columns.size(); }
  double at(std::size_t row, std::size_t col) const { return values[row * width() + col]; }
  std::span<const double> row(std::size_t r) const {
    return {values.data() + r * width(), width()};
  }

  /// Column index; throws std::out_of_range for an unknown name.
  std::size_t column(std::string_view name) const;
  FeatureTable select_columns(std::span<const std::string> names) const;
  FeatureTable select_rows(std::span<const std::size_t> indices) const;
  void append_row(std::pair<NodeId, NodeId> subject, std::span<const double> row, int label = 0);
};

/// Columns: local_nr_i / local_er_i (counts), local_npp_1..3,
/// global_nr_i / global_er_i (z-scored ratios), global_npp_1..2, n_nodes,
/// n_edges, and ratio_i (raw role ratios, used for signals only).
FeatureTable feature_table(std::span<const ThresholdEvent> events, Subject subject);

/// Column names of a feature set: local-nr, local-npp, global-nr,
/// global-npp, global-basic, all (nodes) or local-er, global-er,
/// global-basic, all (edges). Global sets include their local counterparts.
/// Throws std::invalid_argument for an unknown set.
std::vector<std::string> feature_set_columns(std::string_view set, Subject subject);

/// Labels each row by whether its subject is in the top `fraction` of the
/// final-snapshot scores (see label_top_fraction).
void label_rows(FeatureTable& table, const CentralityScores& scores, double fraction = 0.2);

/// Uniform random split; sides keep the original row order. Throws
/// std::invalid_argument when either side would be empty.
std::pair<FeatureTable, FeatureTable> split_train_test(const FeatureTable& table,
                                                       double train_fraction,
                                                       std::uint64_t seed);

struct ForestOptions {
  int n_trees = 30;
  int max_depth = 10;
  int min_samples_split = 2;
  /// Candidate features per split; default ceil(sqrt(width)).
  std::optional<int> max_features;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct TreeNode {
  int feature = -1;  // -1 for a leaf
  double threshold = 0;
  int left = -1;
  int right = -1;
  double positive_rate = 0;
  /// Impurity decrease weighted by the node's share of the bootstrap sample.
  double weighted_decrease = 0;
};

struct DecisionTree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root

  double predict(std::span<const double> x) const;
  int depth() const;
};

struct ForestModel {
  std::vector<DecisionTree> trees;
  std::vector<std::string> columns;
  std::uint64_t seed = 0;

  double predict_proba(std::span<const double> x) const;
  std::vector<double> predict_proba(const FeatureTable& table) const;
};

/// Bootstrap-aggregated Gini trees. Thresholds are midpoints between
/// consecutive distinct values; a split takes the best of `max_features`
/// randomly drawn features that are not constant in the node. Throws
/// std::invalid_argument when the labels hold a single class.
ForestModel train_forest(const FeatureTable& train, const ForestOptions& options);

struct Metrics {
  double f1 = 0;
  double accuracy = 0;
  std::optional<double> auroc;  // absent for a single-class test set
};

/// Rank-statistic AUROC with ties counted one half.
std::optional<double> auroc(std::span<const double> scores, std::span<const int> labels);
/// Positive prediction iff probability > 0.5.
Metrics score_predictions(std::span<const double> probs, std::span<const int> labels);
Metrics evaluate(const ForestModel& model, const FeatureTable& test);

/// Mean over trees of per-tree normalized impurity decreases, renormalized.
/// Throws UndefinedResult when no tree has a split.
std::vector<double> gini_importance(const ForestModel& model);

struct RepeatedMetrics {
  std::vector<Metrics> runs;
  Metrics mean;
  Metrics stddev;  // population standard deviation over runs
};

/// Re-splits and retrains for every repeat r, with split seed
/// child_seed(seed, 2r) and forest seed child_seed(seed, 2r + 1).
RepeatedMetrics repeated_evaluation(const FeatureTable& table, ForestOptions options,
                                    int repeats, double train_fraction = 0.8);

/// Spearman correlation between group index and the per-group mean of each
/// ratio_i column, over groups holding at least one row. Absent when fewer
/// than two groups are populated or either side is constant.
std::array<std::optional<double>, kNumRoles> role_signals(const FeatureTable& table,
                                                          std::span<const int> row_groups);

/// Group of every row's subject from bin_six_groups over the final scores.
std::vector<int> row_groups(const FeatureTable& table, const CentralityScores& scores);

}  // namespace glens

#endif  // GRAPHLET_LENS_ML_HPP_
