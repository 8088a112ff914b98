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

#include "graphlet_lens/ml.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "graphlet_lens/parallel.hpp"
#include "graphlet_lens/random.hpp"
#include "graphlet_lens/stats.hpp"

namespace glens {
namespace {

void add_numbered(std::vector<std::string>& out, const std::string& prefix, int n) {
  for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
}

std::vector<std::string> numbered(const std::string& prefix, int n) {
  std::vector<std::string> out;
  add_numbered(out, prefix, n);
  return out;
}

std::uint64_t arc_key(NodeId src, NodeId dst) {
  return (static_cast<std::uint64_t>(src) << 32) | dst;
}

// Maps each row subject to its position in the final-snapshot score vector.
std::vector<std::size_t> score_positions(const FeatureTable& table,
                                         const CentralityScores& scores) {
  std::vector<std::size_t> pos(table.rows());
  if (scores.measure != Measure::kEdgeBetweenness) {
    for (std::size_t r = 0; r < table.rows(); ++r) {
      pos[r] = table.subjects[r].first;
      if (pos[r] >= scores.values.size()) throw std::out_of_range("subject without a score");
    }
    return pos;
  }
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t e = 0; e < scores.edges.size(); ++e) {
    index.emplace(arc_key(scores.edges[e].first, scores.edges[e].second), e);
  }
  for (std::size_t r = 0; r < table.rows(); ++r) {
    const auto it = index.find(arc_key(table.subjects[r].first, table.subjects[r].second));
    if (it == index.end()) throw std::out_of_range("edge subject without a score");
    pos[r] = it->second;
  }
  return pos;
}

double gini(double positives, double n) {
  if (n <= 0) return 0;
  const double p = positives / n;
  return 2 * p * (1 - p);
}

class TreeBuilder {
 public:
  TreeBuilder(const FeatureTable& table, const ForestOptions& options, int mtry,
              std::uint64_t seed)
      : table_(table), options_(options), mtry_(mtry), rng_(seed) {}

  DecisionTree build() {
    const std::size_t n = table_.rows();
    sample_.resize(n);
    for (auto& s : sample_) s = static_cast<std::size_t>(rng_.below(n));
    features_.resize(table_.width());
    std::iota(features_.begin(), features_.end(), 0);
    grow(0, n, 0);
    return std::move(tree_);
  }

 private:
  struct Split {
    int feature = -1;
    double threshold = 0;
    double decrease = -1;
  };

  int grow(std::size_t lo, std::size_t hi, int depth) {
    const double n = static_cast<double>(hi - lo);
    double positives = 0;
    for (std::size_t i = lo; i < hi; ++i) positives += table_.labels[sample_[i]];
    const int id = static_cast<int>(tree_.nodes.size());
    tree_.nodes.push_back({});
    tree_.nodes[id].positive_rate = positives / n;

    if (depth >= options_.max_depth || n < options_.min_samples_split || positives == 0 ||
        positives == n) {
      return id;
    }
    const Split split = best_split(lo, hi, positives);
    if (split.feature < 0) return id;

    const auto mid = std::partition(sample_.begin() + lo, sample_.begin() + hi, [&](std::size_t s) {
      return table_.at(s, split.feature) <= split.threshold;
    });
    const auto cut = static_cast<std::size_t>(mid - sample_.begin());
    const int left = grow(lo, cut, depth + 1);
    const int right = grow(cut, hi, depth + 1);
    auto& node = tree_.nodes[id];
    node.feature = split.feature;
    node.threshold = split.threshold;
    node.left = left;
    node.right = right;
    node.weighted_decrease = n / static_cast<double>(sample_.size()) * split.decrease;
    return id;
  }

  Split best_split(std::size_t lo, std::size_t hi, double positives) {
    const double n = static_cast<double>(hi - lo);
    const double parent = gini(positives, n);
    Split best;
    int visited = 0;
    const std::size_t p = features_.size();
    for (std::size_t k = 0; k < p && visited < mtry_; ++k) {
      std::swap(features_[k], features_[k + rng_.below(p - k)]);
      const int f = static_cast<int>(features_[k]);
      column_.clear();
      for (std::size_t i = lo; i < hi; ++i) {
        column_.emplace_back(table_.at(sample_[i], f), table_.labels[sample_[i]]);
      }
      const auto [mn, mx] = std::minmax_element(column_.begin(), column_.end());
      if (mn->first == mx->first) continue;  // constant here; does not use up the budget
      ++visited;
      std::sort(column_.begin(), column_.end());
      double left_pos = 0;
      for (std::size_t i = 0; i + 1 < column_.size(); ++i) {
        left_pos += column_[i].second;
        if (column_[i].first == column_[i + 1].first) continue;
        const double nl = static_cast<double>(i + 1);
        const double nr = n - nl;
        const double child = (nl * gini(left_pos, nl) + nr * gini(positives - left_pos, nr)) / n;
        const double decrease = parent - child;
        if (decrease > best.decrease) {
          best.feature = f;
          best.threshold = column_[i].first + (column_[i + 1].first - column_[i].first) / 2;
          best.decrease = decrease;
        }
      }
    }
    return best;
  }

  const FeatureTable& table_;
  const ForestOptions& options_;
  int mtry_;
  Rng rng_;
  DecisionTree tree_;
  std::vector<std::size_t> sample_;
  std::vector<std::size_t> features_;
  std::vector<std::pair<double, int>> column_;
};

}  // namespace

std::size_t FeatureTable::column(std::string_view name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw std::out_of_range("unknown column " + std::string(name));
  return static_cast<std::size_t>(it - columns.begin());
}

FeatureTable FeatureTable::select_columns(std::span<const std::string> names) const {
  std::vector<std::size_t> idx;
  idx.reserve(names.size());
  for (const auto& name : names) idx.push_back(column(name));
  FeatureTable out;
  out.columns.assign(names.begin(), names.end());
  out.labels = labels;
  out.subjects = subjects;
  out.values.reserve(rows() * idx.size());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c : idx) out.values.push_back(at(r, c));
  }
  return out;
}

FeatureTable FeatureTable::select_rows(std::span<const std::size_t> indices) const {
  FeatureTable out;
  out.columns = columns;
  for (std::size_t r : indices) {
    const auto x = row(r);
    out.values.insert(out.values.end(), x.begin(), x.end());
    out.subjects.push_back(subjects.at(r));
    if (!labels.empty()) out.labels.push_back(labels[r]);
  }
  return out;
}

void FeatureTable::append_row(std::pair<NodeId, NodeId> subject, std::span<const double> row,
                              int label) {
  if (row.size() != width()) throw std::invalid_argument("row width does not match the schema");
  values.insert(values.end(), row.begin(), row.end());
  subjects.push_back(subject);
  labels.push_back(label);
}

FeatureTable feature_table(std::span<const ThresholdEvent> events, Subject subject) {
  FeatureTable t;
  const bool node = subject == Subject::kNode;
  add_numbered(t.columns, node ? "local_nr_" : "local_er_", kNumRoles);
  if (node) add_numbered(t.columns, "local_npp_", 3);
  add_numbered(t.columns, node ? "global_nr_" : "global_er_", kNumRoles);
  if (node) add_numbered(t.columns, "global_npp_", 2);
  t.columns.push_back("n_nodes");
  t.columns.push_back("n_edges");
  add_numbered(t.columns, "ratio_", kNumRoles);

  std::vector<double> row;
  for (const auto& ev : events) {
    row.clear();
    for (auto c : ev.roles.counts) row.push_back(static_cast<double>(c));
    if (node) {
      row.insert(row.end(), {ev.npp.triangles, ev.npp.wedges_centered, ev.npp.wedges_ended});
    }
    row.insert(row.end(), ev.standardized.begin(), ev.standardized.end());
    if (node) row.insert(row.end(), {ev.npp.edges_not_incident, ev.npp.nonadjacent_pairs});
    row.push_back(static_cast<double>(ev.snapshot_nodes));
    row.push_back(static_cast<double>(ev.snapshot_edges));
    row.insert(row.end(), ev.roles.ratios.begin(), ev.roles.ratios.end());
    for (double& x : row) {
      if (!std::isfinite(x)) x = 0;
    }
    t.append_row({ev.node, node ? ev.node : ev.dst}, row);
  }
  return t;
}

std::vector<std::string> feature_set_columns(std::string_view set, Subject subject) {
  const bool node = subject == Subject::kNode;
  const std::string local = node ? "local_nr_" : "local_er_";
  const std::string global = node ? "global_nr_" : "global_er_";
  std::vector<std::string> out;
  const auto basic = [&] {
    out.push_back("n_nodes");
    out.push_back("n_edges");
  };
  if (set == "local-nr" || set == "local-er") {
    if ((set == "local-nr") != node) throw std::invalid_argument("feature set does not match subject");
    add_numbered(out, local, kNumRoles);
  } else if (set == "global-nr" || set == "global-er") {
    if ((set == "global-nr") != node) throw std::invalid_argument("feature set does not match subject");
    add_numbered(out, global, kNumRoles);
    add_numbered(out, local, kNumRoles);
  } else if (node && set == "local-npp") {
    add_numbered(out, "local_npp_", 3);
  } else if (node && set == "global-npp") {
    add_numbered(out, "global_npp_", 2);
    add_numbered(out, "local_npp_", 3);
  } else if (set == "global-basic") {
    basic();
  } else if (set == "all") {
    add_numbered(out, global, kNumRoles);
    add_numbered(out, local, kNumRoles);
    if (node) {
      add_numbered(out, "global_npp_", 2);
      add_numbered(out, "local_npp_", 3);
    }
    basic();
  } else {
    throw std::invalid_argument("unknown feature set " + std::string(set));
  }
  return out;
}

void label_rows(FeatureTable& table, const CentralityScores& scores, double fraction) {
  const auto top = label_top_fraction(scores.values, fraction);
  const auto pos = score_positions(table, scores);
  table.labels.assign(table.rows(), 0);
  for (std::size_t r = 0; r < table.rows(); ++r) table.labels[r] = top[pos[r]] ? 1 : 0;
}

std::vector<int> row_groups(const FeatureTable& table, const CentralityScores& scores) {
  const auto groups = bin_six_groups(scores.values);
  const auto pos = score_positions(table, scores);
  std::vector<int> out(table.rows());
  for (std::size_t r = 0; r < table.rows(); ++r) out[r] = groups[pos[r]];
  return out;
}

std::pair<FeatureTable, FeatureTable> split_train_test(const FeatureTable& table,
                                                       double train_fraction,
                                                       std::uint64_t seed) {
  if (!(train_fraction > 0 && train_fraction < 1)) {
    throw std::invalid_argument("train fraction must be in (0, 1)");
  }
  const std::size_t n = table.rows();
  const auto n_train =
      static_cast<std::size_t>(std::floor(train_fraction * static_cast<double>(n) + 0.5));
  if (n_train == 0 || n_train >= n) {
    throw std::invalid_argument("split of " + std::to_string(n) + " rows leaves an empty side");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  rng.shuffle(std::span<std::size_t>(order));
  std::vector<std::size_t> train(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_train));
  std::vector<std::size_t> test(order.begin() + static_cast<std::ptrdiff_t>(n_train), order.end());
  std::sort(train.begin(), train.end());
  std::sort(test.begin(), test.end());
  return {table.select_rows(train), table.select_rows(test)};
}

double DecisionTree::predict(std::span<const double> x) const {
  int id = 0;
  while (nodes[id].feature >= 0) {
    id = x[nodes[id].feature] <= nodes[id].threshold ? nodes[id].left : nodes[id].right;
  }
  return nodes[id].positive_rate;
}

int DecisionTree::depth() const {
  std::vector<int> d(nodes.size(), 0);
  int best = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    best = std::max(best, d[i]);
    if (nodes[i].feature >= 0) {
      d[nodes[i].left] = d[i] + 1;
      d[nodes[i].right] = d[i] + 1;
    }
  }
  return best;
}

double ForestModel::predict_proba(std::span<const double> x) const {
  double total = 0;
  for (const auto& t : trees) total += t.predict(x);
  return total / static_cast<double>(trees.size());
}

std::vector<double> ForestModel::predict_proba(const FeatureTable& table) const {
  if (table.columns != columns) throw std::invalid_argument("feature schema mismatch");
  std::vector<double> out(table.rows());
  for (std::size_t r = 0; r < table.rows(); ++r) out[r] = predict_proba(table.row(r));
  return out;
}

ForestModel train_forest(const FeatureTable& train, const ForestOptions& options) {
  if (options.n_trees < 1) throw std::invalid_argument("n_trees must be >= 1");
  if (options.max_depth < 0) throw std::invalid_argument("max_depth must be >= 0");
  if (train.labels.size() != train.rows() || train.rows() == 0) {
    throw std::invalid_argument("training table needs one label per row");
  }
  const auto positives = std::count(train.labels.begin(), train.labels.end(), 1);
  const auto negatives = std::count(train.labels.begin(), train.labels.end(), 0);
  if (positives + negatives != static_cast<std::ptrdiff_t>(train.rows())) {
    throw std::invalid_argument("labels must be 0 or 1");
  }
  if (positives == 0 || negatives == 0) {
    throw std::invalid_argument("training labels hold a single class");
  }
  const int width = static_cast<int>(train.width());
  const int mtry = std::clamp(
      options.max_features.value_or(static_cast<int>(std::ceil(std::sqrt(width)))), 1,
      std::max(width, 1));

  ForestModel model;
  model.columns = train.columns;
  model.seed = options.seed;
  model.trees.resize(options.n_trees);
  parallel_for(model.trees.size(), options.threads > 0 ? options.threads : default_thread_count(),
               [&](std::size_t t) {
                 model.trees[t] =
                     TreeBuilder(train, options, mtry, child_seed(options.seed, t)).build();
               });
  return model;
}

std::optional<double> auroc(std::span<const double> scores, std::span<const int> labels) {
  if (scores.size() != labels.size()) throw std::invalid_argument("length mismatch");
  const auto ranks = average_ranks(scores);
  double pos = 0, rank_sum = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == 1) {
      ++pos;
      rank_sum += ranks[i];
    }
  }
  const double neg = static_cast<double>(labels.size()) - pos;
  if (pos == 0 || neg == 0) return std::nullopt;
  return (rank_sum - pos * (pos + 1) / 2) / (pos * neg);
}

Metrics score_predictions(std::span<const double> probs, std::span<const int> labels) {
  if (probs.size() != labels.size()) throw std::invalid_argument("length mismatch");
  if (probs.empty()) throw std::invalid_argument("empty test set");
  double tp = 0, fp = 0, fn = 0, correct = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const bool predicted = probs[i] > 0.5;
    const bool actual = labels[i] == 1;
    tp += predicted && actual;
    fp += predicted && !actual;
    fn += !predicted && actual;
    correct += predicted == actual;
  }
  Metrics m;
  m.f1 = tp > 0 ? 2 * tp / (2 * tp + fp + fn) : 0.0;
  m.accuracy = correct / static_cast<double>(probs.size());
  m.auroc = auroc(probs, labels);
  return m;
}

Metrics evaluate(const ForestModel& model, const FeatureTable& test) {
  if (test.labels.size() != test.rows()) throw std::invalid_argument("test table is unlabelled");
  return score_predictions(model.predict_proba(test), test.labels);
}

std::vector<double> gini_importance(const ForestModel& model) {
  const std::size_t width = model.columns.size();
  std::vector<double> total(width, 0.0);
  bool any_split = false;
  for (const auto& tree : model.trees) {
    std::vector<double> per(width, 0.0);
    double sum = 0;
    for (const auto& node : tree.nodes) {
      if (node.feature < 0) continue;
      per[node.feature] += node.weighted_decrease;
      sum += node.weighted_decrease;
    }
    if (sum <= 0) continue;
    any_split = true;
    for (std::size_t f = 0; f < width; ++f) total[f] += per[f] / sum;
  }
  if (!any_split) throw UndefinedResult("no tree has an informative split");
  const double sum = std::accumulate(total.begin(), total.end(), 0.0);
  for (double& x : total) x /= sum;
  return total;
}

RepeatedMetrics repeated_evaluation(const FeatureTable& table, ForestOptions options,
                                    int repeats, double train_fraction) {
  if (repeats < 1) throw std::invalid_argument("repeats must be >= 1");
  RepeatedMetrics out;
  const std::uint64_t base = options.seed;
  for (int r = 0; r < repeats; ++r) {
    const auto [train, test] =
        split_train_test(table, train_fraction, child_seed(base, 2 * static_cast<std::uint64_t>(r)));
    options.seed = child_seed(base, 2 * static_cast<std::uint64_t>(r) + 1);
    out.runs.push_back(evaluate(train_forest(train, options), test));
  }
  std::vector<double> f1, acc, auc;
  for (const auto& m : out.runs) {
    f1.push_back(m.f1);
    acc.push_back(m.accuracy);
    if (m.auroc) auc.push_back(*m.auroc);
  }
  out.mean.f1 = mean(f1);
  out.mean.accuracy = mean(acc);
  out.stddev.f1 = population_stddev(f1);
  out.stddev.accuracy = population_stddev(acc);
  if (!auc.empty()) {
    out.mean.auroc = mean(auc);
    out.stddev.auroc = population_stddev(auc);
  }
  return out;
}

std::array<std::optional<double>, kNumRoles> role_signals(const FeatureTable& table,
                                                          std::span<const int> row_groups) {
  if (row_groups.size() != table.rows()) throw std::invalid_argument("one group per row required");
  std::array<std::optional<double>, kNumRoles> out{};
  const auto columns = numbered("ratio_", kNumRoles);
  for (int i = 0; i < kNumRoles; ++i) {
    const std::size_t c = table.column(columns[i]);
    std::map<int, std::pair<double, double>> sums;  // group -> (sum, count)
    for (std::size_t r = 0; r < table.rows(); ++r) {
      auto& s = sums[row_groups[r]];
      s.first += table.at(r, c);
      s.second += 1;
    }
    std::vector<double> xs, ys;
    for (const auto& [group, s] : sums) {
      xs.push_back(group);
      ys.push_back(s.first / s.second);
    }
    try {
      out[i] = spearman(xs, ys);
    } catch (const std::invalid_argument&) {
    } catch (const UndefinedResult&) {
    }
  }
  return out;
}

}  // namespace glens
