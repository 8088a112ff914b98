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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace cli {
namespace {

std::string numbered(const std::string& prefix, int i) { return prefix + std::to_string(i); }

json vec_json(const double* xs, std::size_t n) {
  json out = json::array();
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::isfinite(xs[i]) ? json(xs[i]) : json());
  return out;
}

std::vector<double> json_vec(const json& j, const std::string& where) {
  if (!j.is_array()) throw bad_input(where + ": expected an array");
  std::vector<double> out;
  for (const auto& x : j) {
    if (!x.is_number()) throw bad_input(where + ": expected numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw bad_input("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw bad_input(path.string() + ": " + e.what());
  }
}

gl_subject parse_subject(const std::string& s) {
  if (s == "node") return GL_SUBJECT_NODE;
  if (s == "edge") return GL_SUBJECT_EDGE;
  throw bad_input("subject must be 'node' or 'edge', got '" + s + "'");
}

std::int64_t original_id(const gl_graph* g, std::uint32_t node) {
  std::int64_t id = 0;
  check(gl_graph_original_id(g, node, &id), "mapping node id");
  return id;
}

std::vector<gl_checkpoint> checkpoints_of(const gl_series* series) {
  std::vector<gl_checkpoint> out(gl_series_size(series));
  for (std::size_t i = 0; i < out.size(); ++i) {
    check(gl_series_checkpoint(series, i, &out[i]), "reading checkpoint");
  }
  return out;
}

Series count(const gl_graph* g, const gl_atlas* atlas, std::size_t checkpoints) {
  gl_series* raw = nullptr;
  check(gl_count_stream(g, atlas, checkpoints, &raw), "counting graphlets");
  return Series(raw);
}

std::string series_csv(const std::vector<gl_checkpoint>& rows) {
  std::ostringstream out;
  out << "evolution_ratio,edges_processed";
  for (int k = 1; k <= GL_NUM_GRAPHLETS; ++k) out << ",count_" << k;
  for (int k = 1; k <= GL_NUM_GRAPHLETS; ++k) out << ",ratio_" << k;
  out << '\n';
  for (const auto& c : rows) {
    out << format_double(c.evolution_ratio) << ',' << c.edges_processed;
    for (auto x : c.counts) out << ',' << x;
    for (auto x : c.ratios) out << ',' << format_double(x);
    out << '\n';
  }
  return out.str();
}

json profile_json(const gl_profile& p) {
  return {{"observed", vec_json(p.observed, p.length)},
          {"random_mean", vec_json(p.random_mean, p.length)},
          {"significance", vec_json(p.significance, p.length)},
          {"profile", vec_json(p.profile, p.length)}};
}

// Nonlinearity (area between the curve and its fitted line) of each
// graphlet's ratio against the evolution ratio; null where undefined.
std::vector<std::optional<double>> series_nonlinearity(const std::vector<double>& xs,
                                                       const std::vector<std::vector<double>>& ys,
                                                       std::size_t samples) {
  std::vector<std::optional<double>> out;
  for (const auto& y : ys) {
    double v = 0.0;
    const gl_status s = gl_nonlinearity(xs.data(), y.data(), xs.size(), samples, &v);
    if (s == GL_OK) {
      out.emplace_back(v);
    } else if (s == GL_ERR_UNDEFINED || s == GL_ERR_INVALID_ARGUMENT) {
      out.emplace_back();
    } else {
      check(s, "nonlinearity");
    }
  }
  return out;
}

json optional_json(const std::optional<double>& x) { return x ? json(*x) : json(); }

std::optional<double> mean_defined(const std::vector<std::optional<double>>& xs) {
  double sum = 0.0;
  int n = 0;
  for (const auto& x : xs) {
    if (x) {
      sum += *x;
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return sum / n;
}

// Feature CSVs carry subject ids in leading columns, then numeric columns.
struct FeatureCsv {
  gl_subject subject = GL_SUBJECT_NODE;
  std::vector<std::string> keys;
  std::vector<std::string> columns;
  Features table;
};

std::string node_key(std::int64_t a) { return std::to_string(a); }
std::string edge_key(std::int64_t a, std::int64_t b) {
  return std::to_string(a) + "->" + std::to_string(b);
}

FeatureCsv read_features(const fs::path& path) {
  const Csv csv = read_csv(path);
  FeatureCsv out;
  std::size_t lead = 0;
  if (!csv.header.empty() && csv.header[0] == "node") {
    out.subject = GL_SUBJECT_NODE;
    lead = 1;
  } else if (csv.header.size() >= 2 && csv.header[0] == "src" && csv.header[1] == "dst") {
    out.subject = GL_SUBJECT_EDGE;
    lead = 2;
  } else {
    throw bad_input(path.string() + ": first column must be 'node' or 'src,dst'");
  }
  out.columns.assign(csv.header.begin() + static_cast<std::ptrdiff_t>(lead), csv.header.end());
  std::vector<const char*> names;
  for (const auto& c : out.columns) names.push_back(c.c_str());
  gl_features* raw = nullptr;
  check(gl_features_create(names.data(), names.size(), &raw), "creating feature table");
  out.table.reset(raw);
  std::vector<double> row(out.columns.size());
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    const auto& fields = csv.rows[r];
    const std::string where = path.string() + " row " + std::to_string(r + 1);
    if (lead == 1) {
      out.keys.push_back(node_key(parse_int(fields[0], where)));
    } else {
      out.keys.push_back(edge_key(parse_int(fields[0], where), parse_int(fields[1], where)));
    }
    for (std::size_t c = 0; c < row.size(); ++c) row[c] = parse_double(fields[lead + c], where);
    const auto id = static_cast<std::uint32_t>(r);
    check(gl_features_append(out.table.get(), id, id, row.data(), 0), "appending row");
  }
  return out;
}

// Centrality CSVs: subject columns, score, top20, group.
struct ScoreCsv {
  std::unordered_map<std::string, int> labels;
  std::unordered_map<std::string, int> groups;
};

ScoreCsv read_scores(const fs::path& path, gl_subject subject) {
  const Csv csv = read_csv(path);
  ScoreCsv out;
  const bool node = csv.has_column("node");
  if (node != (subject == GL_SUBJECT_NODE)) {
    throw bad_input(path.string() + ": centrality subjects do not match the feature subjects");
  }
  const std::size_t top = csv.column("top20");
  const std::size_t group = csv.column("group");
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    const auto& f = csv.rows[r];
    const std::string where = path.string() + " row " + std::to_string(r + 1);
    const std::string key =
        node ? node_key(parse_int(f[csv.column("node")], where))
             : edge_key(parse_int(f[csv.column("src")], where), parse_int(f[csv.column("dst")], where));
    out.labels[key] = static_cast<int>(parse_int(f[top], where));
    out.groups[key] = static_cast<int>(parse_int(f[group], where));
  }
  return out;
}

int lookup(const std::unordered_map<std::string, int>& m, const std::string& key,
           const fs::path& path) {
  const auto it = m.find(key);
  if (it == m.end()) throw bad_input(path.string() + " has no score for subject " + key);
  return it->second;
}

Features select(const gl_features* table, const std::string& sets, gl_subject subject) {
  gl_features* raw = nullptr;
  check(gl_features_select(table, sets.c_str(), subject, &raw), "selecting feature sets " + sets);
  return Features(raw);
}

std::vector<std::string> column_names(const gl_features* table) {
  std::vector<std::string> out;
  for (std::size_t c = 0; c < gl_features_width(table); ++c) out.emplace_back(gl_features_column(table, c));
  return out;
}

gl_null_model parse_null_model(const std::string& s) {
  if (s == "degree-preserving") return GL_NULL_DEGREE_PRESERVING;
  if (s == "time-shuffle") return GL_NULL_TIME_SHUFFLE;
  throw bad_input("null model must be 'degree-preserving' or 'time-shuffle', got '" + s + "'");
}

}  // namespace

void run_atlas(const Context& ctx, const AtlasArgs& args) {
  const Atlas atlas = make_atlas(args.numbering);
  json graphlets = json::array(), node_orbits = json::array(), edge_orbits = json::array(),
       transitions = json::array();
  for (int id = 1; id <= GL_NUM_GRAPHLETS; ++id) {
    gl_graphlet_info g{};
    check(gl_atlas_graphlet(atlas.get(), id, &g), "reading graphlet");
    graphlets.push_back({{"id", g.id},
                         {"representative", g.representative},
                         {"edges", g.edges},
                         {"automorphisms", g.automorphisms},
                         {"centers", g.centers}});
  }
  for (int id = 1; id <= GL_NUM_NODE_ORBITS; ++id) {
    gl_orbit_info o{};
    check(gl_atlas_node_orbit(atlas.get(), id, &o), "reading node orbit");
    node_orbits.push_back({{"id", o.id}, {"graphlet", o.graphlet}, {"position", o.member}, {"size", o.size}});
  }
  for (int id = 1; id <= GL_NUM_EDGE_ORBITS; ++id) {
    gl_orbit_info o{};
    check(gl_atlas_edge_orbit(atlas.get(), id, &o), "reading edge orbit");
    edge_orbits.push_back({{"id", o.id}, {"graphlet", o.graphlet}, {"slot", o.member}, {"size", o.size}});
  }
  for (int id = 1; id <= GL_NUM_TRANSITIONS; ++id) {
    gl_transition_info t{};
    check(gl_atlas_transition(atlas.get(), id, &t), "reading transition");
    transitions.push_back({{"id", t.id},
                           {"source_representative", t.source_representative},
                           {"source_graphlet", t.source_graphlet},
                           {"target", t.target}});
  }
  const json doc = {
      {"counts",
       {{"graphlets", graphlets.size()},
        {"node_orbits", node_orbits.size()},
        {"edge_orbits", edge_orbits.size()},
        {"transitions", transitions.size()}}},
      {"slot_bits", {"a->b", "b->a", "a->c", "c->a", "b->c", "c->b"}},
      {"graphlets", graphlets},
      {"node_orbits", node_orbits},
      {"edge_orbits", edge_orbits},
      {"transitions", transitions},
  };
  const std::string text = doc.dump(2) + "\n";
  if (args.output.empty()) {
    std::cout << text;
    return;
  }
  Manifest m;
  if (!args.numbering.empty()) m.inputs.push_back(args.numbering);
  m.parameters = {{"numbering", args.numbering}};
  write_output(ctx, args.output, text, m);
}

void run_count(const Context& ctx, const CountArgs& args) {
  const Atlas atlas = make_atlas(args.numbering);
  const Graph g = load_graph(args.input);
  const Series series = count(g.get(), atlas.get(), args.checkpoints);
  Manifest m;
  m.inputs = {args.input};
  m.parameters = {{"checkpoints", args.checkpoints}, {"numbering", args.numbering}};
  gl_ingest_stats ingest{};
  check(gl_graph_ingest_stats(g.get(), &ingest), "reading ingest stats");
  m.results = {{"nodes", gl_graph_node_count(g.get())},
               {"edges", gl_graph_edge_count(g.get())},
               {"self_loops_dropped", ingest.self_loops},
               {"distinct_pairs", ingest.distinct_pairs},
               {"neighbor_work", gl_series_neighbor_work(series.get())}};
  write_output(ctx, args.output, series_csv(checkpoints_of(series.get())), m);
}

void run_gtg(const Context& ctx, const GtgArgs& args) {
  const Atlas atlas = make_atlas(args.numbering);
  const Graph g = load_graph(args.input);
  std::uint64_t weights[GL_NUM_TRANSITIONS] = {};
  check(gl_compute_gtg(g.get(), atlas.get(), weights), "computing transitions");
  std::int64_t births[GL_NUM_GRAPHLETS], inbound[GL_NUM_GRAPHLETS], outbound[GL_NUM_GRAPHLETS];
  check(gl_transition_balance(atlas.get(), weights, births, inbound, outbound), "balancing");
  const Series series = count(g.get(), atlas.get(), 1);
  std::int64_t census[GL_NUM_GRAPHLETS] = {};
  if (gl_series_size(series.get()) > 0) {
    gl_checkpoint last{};
    check(gl_series_checkpoint(series.get(), gl_series_size(series.get()) - 1, &last), "census");
    std::copy(std::begin(last.counts), std::end(last.counts), census);
  }
  json edges = json::array(), balance = json::array();
  std::uint64_t total = 0;
  for (int id = 1; id <= GL_NUM_TRANSITIONS; ++id) {
    gl_transition_info t{};
    check(gl_atlas_transition(atlas.get(), id, &t), "reading transition");
    edges.push_back({{"id", id},
                     {"source_graphlet", t.source_graphlet},
                     {"source_representative", t.source_representative},
                     {"target", t.target},
                     {"weight", weights[id - 1]}});
    total += weights[id - 1];
  }
  bool conserved = true;
  for (int k = 0; k < GL_NUM_GRAPHLETS; ++k) {
    const std::int64_t net = births[k] + inbound[k] - outbound[k];
    conserved = conserved && net == census[k];
    balance.push_back({{"graphlet", k + 1},
                       {"births", births[k]},
                       {"inbound", inbound[k]},
                       {"outbound", outbound[k]},
                       {"net", net},
                       {"final_count", census[k]}});
  }
  const json doc = {{"input", args.input},
                    {"edges", edges},
                    {"total_weight", total},
                    {"balance", balance},
                    {"conserved", conserved}};
  Manifest m;
  m.inputs = {args.input};
  m.parameters = {{"numbering", args.numbering}};
  m.results = {{"total_weight", total}, {"conserved", conserved}};
  write_output(ctx, args.output, doc.dump(2) + "\n", m);
}

void run_cp(const Context& ctx, const CpArgs& args) {
  if (args.random < 1) throw bad_input("--random must be at least 1");
  const Atlas atlas = make_atlas(args.numbering);
  const Graph g = load_graph(args.input);
  gl_profile_options opts;
  gl_profile_options_default(&opts);
  opts.n_random = args.random;
  opts.epsilon = args.epsilon;
  opts.seed = args.seed;
  opts.threads = ctx.threads;
  gl_profile transition{}, occurrence{};
  check(gl_compute_cp(g.get(), atlas.get(), &opts, &transition), "transition profile");
  check(gl_cp_from_occurrences(g.get(), atlas.get(), &opts, parse_null_model(args.null_model),
                               &occurrence),
        "occurrence profile");
  const std::string name = args.name.empty() ? fs::path(args.input).stem().string() : args.name;
  const json doc = {{"name", name},
                    {"input", args.input},
                    {"random", args.random},
                    {"epsilon", args.epsilon},
                    {"seed", args.seed},
                    {"transition", profile_json(transition)},
                    {"occurrence", profile_json(occurrence)},
                    {"occurrence_null_model", args.null_model}};
  Manifest m;
  m.inputs = {args.input};
  m.parameters = {{"random", args.random},
                  {"epsilon", args.epsilon},
                  {"seed", args.seed},
                  {"null_model", args.null_model},
                  {"numbering", args.numbering}};
  write_output(ctx, args.output, doc.dump(2) + "\n", m);
}

void run_similarity(const Context& ctx, const SimilarityArgs& args) {
  if (args.kind != "transition" && args.kind != "occurrence") {
    throw bad_input("--kind must be 'transition' or 'occurrence'");
  }
  std::map<std::string, std::string> domain_of;
  if (!args.labels.empty()) {
    const Csv labels = read_csv(args.labels);
    const std::size_t nc = labels.column("name"), dc = labels.column("domain");
    for (const auto& row : labels.rows) domain_of[row[nc]] = row[dc];
  }
  std::vector<std::string> names, domains, excluded;
  std::vector<std::vector<double>> profiles;
  for (const auto& path : args.cps) {
    const json doc = read_json(path);
    const std::string name = doc.value("name", fs::path(path).stem().string());
    if (!doc.contains(args.kind)) throw bad_input(path + ": no " + args.kind + " profile");
    auto p = json_vec(doc[args.kind]["profile"], path);
    const auto [lo, hi] = std::minmax_element(p.begin(), p.end());
    if (p.empty() || *lo == *hi) {
      std::cerr << "warning: " << name << " has a constant " << args.kind
                << " profile and is excluded\n";
      excluded.push_back(name);
      continue;
    }
    if (!args.labels.empty()) {
      const auto it = domain_of.find(name);
      if (it == domain_of.end()) throw bad_input(args.labels + " has no domain for " + name);
      domains.push_back(it->second);
    }
    names.push_back(name);
    profiles.push_back(std::move(p));
  }
  const std::size_t n = names.size();
  std::vector<double> matrix(n * n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (profiles[i].size() != profiles[j].size()) throw bad_input("profiles differ in length");
      double r = 0.0;
      check(gl_pearson(profiles[i].data(), profiles[j].data(), profiles[i].size(), &r), "similarity");
      matrix[i * n + j] = matrix[j * n + i] = r;
    }
  }
  std::ostringstream out;
  out << "name";
  for (const auto& nm : names) out << ',' << nm;
  out << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    out << names[i];
    for (std::size_t j = 0; j < n; ++j) out << ',' << format_double(matrix[i * n + j]);
    out << '\n';
  }
  Manifest m;
  m.inputs = args.cps;
  if (!args.labels.empty()) m.inputs.push_back(args.labels);
  m.parameters = {{"kind", args.kind}};
  m.results["excluded"] = excluded;
  if (!args.labels.empty() && n >= 2) {
    std::vector<const char*> labels;
    for (const auto& d : domains) labels.push_back(d.c_str());
    double threshold = 0.0, accuracy = 0.0;
    check(gl_classify_by_threshold(matrix.data(), labels.data(), n, &threshold, &accuracy),
          "threshold classification");
    double within = 0.0, across = 0.0;
    int nw = 0, na = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (domains[i] == domains[j]) {
          within += matrix[i * n + j];
          ++nw;
        } else {
          across += matrix[i * n + j];
          ++na;
        }
      }
    }
    m.results["threshold"] = threshold;
    m.results["accuracy"] = accuracy;
    m.results["mean_within_domain"] = nw ? json(within / nw) : json();
    m.results["mean_across_domain"] = na ? json(across / na) : json();
    std::cout << "threshold " << format_double(threshold) << " accuracy " << format_double(accuracy)
              << '\n';
  }
  write_output(ctx, args.output, out.str(), m);
}

void run_features(const Context& ctx, const FeaturesArgs& args) {
  const gl_subject subject = parse_subject(args.subject);
  const Atlas atlas = make_atlas(args.numbering);
  const Graph g = load_graph(args.input);
  gl_features* raw = nullptr;
  check(gl_scan_features(g.get(), atlas.get(), args.dtheta, subject, args.refresh, &raw),
        "scanning threshold events");
  const Features table(raw);
  const Features chosen = select(table.get(), args.sets, subject);
  std::vector<std::string> columns = column_names(chosen.get());
  for (int i = 1; i <= GL_NUM_ROLES; ++i) {
    const std::string c = numbered("ratio_", i);
    if (std::find(columns.begin(), columns.end(), c) == columns.end()) columns.push_back(c);
  }
  const auto all = column_names(table.get());
  std::vector<std::size_t> index;
  for (const auto& c : columns) {
    index.push_back(static_cast<std::size_t>(std::find(all.begin(), all.end(), c) - all.begin()));
  }
  std::ostringstream out;
  out << (subject == GL_SUBJECT_NODE ? "node" : "src,dst");
  for (const auto& c : columns) out << ',' << c;
  out << '\n';
  const std::size_t rows = gl_features_rows(table.get());
  for (std::size_t r = 0; r < rows; ++r) {
    std::uint32_t a = 0, b = 0;
    check(gl_features_subject(table.get(), r, &a, &b), "reading subject");
    out << original_id(g.get(), a);
    if (subject == GL_SUBJECT_EDGE) out << ',' << original_id(g.get(), b);
    for (const auto c : index) {
      double v = 0.0;
      check(gl_features_value(table.get(), r, c, &v), "reading feature");
      out << ',' << format_double(v);
    }
    out << '\n';
  }
  Manifest m;
  m.inputs = {args.input};
  m.parameters = {{"dtheta", args.dtheta},
                  {"subject", args.subject},
                  {"sets", args.sets},
                  {"refresh", args.refresh},
                  {"numbering", args.numbering}};
  m.results = {{"rows", rows}, {"columns", columns.size()}};
  write_output(ctx, args.output, out.str(), m);
}

void run_centrality(const Context& ctx, const CentralityArgs& args) {
  gl_measure measure{};
  check(gl_parse_measure(args.measure.c_str(), &measure), "parsing measure");
  const Graph g = load_graph(args.input);
  gl_scores* raw = nullptr;
  check(gl_centrality(g.get(), measure, ctx.threads, args.max_nodes, &raw), "computing " + args.measure);
  const Scores scores(raw);
  const std::size_t n = gl_scores_size(scores.get());
  std::vector<int> top(n), groups(n);
  check(gl_scores_top_labels(scores.get(), args.top_fraction, top.data()), "labelling");
  check(gl_scores_groups(scores.get(), groups.data()), "grouping");
  const bool edge = measure == GL_MEASURE_EDGE_BETWEENNESS;
  std::ostringstream out;
  out << (edge ? "src,dst" : "node") << ",score,top20,group\n";
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t a = 0, b = 0;
    double v = 0.0;
    check(gl_scores_subject(scores.get(), i, &a, &b), "reading subject");
    check(gl_scores_value(scores.get(), i, &v), "reading score");
    out << original_id(g.get(), a);
    if (edge) out << ',' << original_id(g.get(), b);
    out << ',' << format_double(v) << ',' << top[i] << ',' << groups[i] << '\n';
  }
  Manifest m;
  m.inputs = {args.input};
  m.parameters = {{"measure", args.measure}, {"max_nodes", args.max_nodes}, {"top_fraction", args.top_fraction}};
  m.results = {{"subjects", n}};
  write_output(ctx, args.output, out.str(), m);
}

void run_signals(const Context& ctx, const SignalsArgs& args) {
  if (args.groups != 6) throw bad_input("only six centrality groups are supported");
  const FeatureCsv feats = read_features(args.features);
  const ScoreCsv scores = read_scores(args.centrality, feats.subject);
  std::vector<int> groups;
  for (const auto& key : feats.keys) groups.push_back(lookup(scores.groups, key, args.centrality));
  double signals[GL_NUM_ROLES];
  int present[GL_NUM_ROLES];
  check(gl_role_signals(feats.table.get(), groups.data(), signals, present), "role signals");
  std::ostringstream out;
  out << "role,spearman\n";
  std::vector<std::optional<double>> values;
  for (int i = 0; i < GL_NUM_ROLES; ++i) {
    out << (i + 1) << ',';
    if (present[i]) {
      out << format_double(signals[i]);
      values.emplace_back(std::abs(signals[i]));
    }
    out << '\n';
  }
  const auto mean_abs = mean_defined(values);
  Manifest m;
  m.inputs = {args.features, args.centrality};
  m.parameters = {{"groups", args.groups}};
  m.results = {{"rows", feats.keys.size()},
               {"defined", values.size()},
               {"mean_abs_spearman", optional_json(mean_abs)}};
  write_output(ctx, args.output, out.str(), m);
}

void run_nonlinearity(const Context& ctx, const NonlinearityArgs& args) {
  if (args.series.empty() && args.input.empty()) throw bad_input("give --series files or --input");
  json report = json::object();
  Manifest m;
  m.parameters = {{"samples", args.samples}};
  json per_series = json::array();
  for (const auto& path : args.series) {
    const Csv csv = read_csv(path);
    std::vector<double> xs;
    std::vector<std::vector<double>> ys(GL_NUM_GRAPHLETS);
    const std::size_t xc = csv.column("evolution_ratio");
    for (std::size_t r = 0; r < csv.rows.size(); ++r) {
      const std::string where = path + " row " + std::to_string(r + 1);
      xs.push_back(parse_double(csv.rows[r][xc], where));
      for (int k = 0; k < GL_NUM_GRAPHLETS; ++k) {
        ys[k].push_back(parse_double(csv.rows[r][csv.column(numbered("ratio_", k + 1))], where));
      }
    }
    const auto nl = series_nonlinearity(xs, ys, args.samples);
    json values = json::array();
    for (const auto& x : nl) values.push_back(optional_json(x));
    per_series.push_back({{"series", path}, {"graphlets", values}, {"mean", optional_json(mean_defined(nl))}});
    m.inputs.push_back(path);
  }
  report["series"] = per_series;
  if (!args.input.empty()) {
    if (args.shuffles < 1) throw bad_input("--shuffles must be at least 1");
    const Atlas atlas = make_atlas(args.numbering);
    const Graph g = load_graph(args.input);
    const auto curve = [&](const gl_graph* graph) {
      const Series s = count(graph, atlas.get(), args.checkpoints);
      const auto rows = checkpoints_of(s.get());
      std::vector<double> xs;
      std::vector<std::vector<double>> ys(GL_NUM_GRAPHLETS);
      for (const auto& c : rows) {
        xs.push_back(c.evolution_ratio);
        for (int k = 0; k < GL_NUM_GRAPHLETS; ++k) ys[k].push_back(c.ratios[k]);
      }
      return series_nonlinearity(xs, ys, args.samples);
    };
    const auto real = curve(g.get());
    std::vector<std::vector<std::optional<double>>> shuffled;
    for (int i = 0; i < args.shuffles; ++i) {
      gl_graph* raw = nullptr;
      check(gl_graph_shuffle_times(g.get(), args.seed + static_cast<std::uint64_t>(i) + 1, &raw),
            "shuffling timestamps");
      const Graph sg(raw);
      shuffled.push_back(curve(sg.get()));
    }
    json real_j = json::array(), random_j = json::array();
    std::vector<std::optional<double>> random_mean;
    for (int k = 0; k < GL_NUM_GRAPHLETS; ++k) {
      std::vector<std::optional<double>> col;
      for (const auto& s : shuffled) col.push_back(s[k]);
      random_mean.push_back(mean_defined(col));
      real_j.push_back(optional_json(real[k]));
      random_j.push_back(optional_json(random_mean.back()));
    }
    const auto real_mean = mean_defined(real), rand_mean = mean_defined(random_mean);
    report["comparison"] = {{"input", args.input},
                            {"checkpoints", args.checkpoints},
                            {"shuffles", args.shuffles},
                            {"seed", args.seed},
                            {"real", real_j},
                            {"random", random_j},
                            {"real_mean", optional_json(real_mean)},
                            {"random_mean", optional_json(rand_mean)}};
    m.inputs.push_back(args.input);
    m.parameters["checkpoints"] = args.checkpoints;
    m.parameters["shuffles"] = args.shuffles;
    m.parameters["seed"] = args.seed;
    m.results = {{"real_mean", optional_json(real_mean)}, {"random_mean", optional_json(rand_mean)}};
  }
  write_output(ctx, args.output, report.dump(2) + "\n", m);
}

void run_predict(const Context& ctx, const PredictArgs& args) {
  if (args.repeats < 1) throw bad_input("--repeats must be at least 1");
  const FeatureCsv feats = read_features(args.features);
  const ScoreCsv scores = read_scores(args.labels, feats.subject);
  std::size_t positives = 0;
  for (std::size_t r = 0; r < feats.keys.size(); ++r) {
    const int label = lookup(scores.labels, feats.keys[r], args.labels);
    positives += label != 0;
    check(gl_features_set_label(feats.table.get(), r, label), "labelling");
  }
  gl_forest_options opts;
  gl_forest_options_default(&opts);
  opts.n_trees = args.trees;
  opts.max_depth = args.depth;
  opts.min_samples_split = args.min_split;
  opts.seed = args.seed;
  opts.threads = ctx.threads;
  json results = json::array();
  for (const auto& sets : args.sets) {
    const Features table = select(feats.table.get(), sets, feats.subject);
    gl_metrics mean{}, sd{};
    check(gl_repeated_evaluation(table.get(), &opts, args.repeats, args.train_fraction, &mean, &sd),
          "evaluating " + sets);
    gl_forest* raw = nullptr;
    check(gl_forest_train(table.get(), &opts, &raw), "training on " + sets);
    const Forest forest(raw);
    std::vector<double> importance(gl_forest_width(forest.get()));
    json top = json::array();
    const gl_status s = gl_forest_importance(forest.get(), importance.data());
    if (s == GL_OK) {
      const auto names = column_names(table.get());
      std::vector<std::size_t> order(importance.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return importance[a] > importance[b]; });
      for (std::size_t i = 0; i < order.size() && i < static_cast<std::size_t>(args.top_features); ++i) {
        top.push_back({{"feature", names[order[i]]}, {"importance", importance[order[i]]}});
      }
    } else if (s != GL_ERR_UNDEFINED) {
      check(s, "importance");
    }
    const auto pair = [](double m, double d) { return json{{"mean", m}, {"std", d}}; };
    json auroc = mean.has_auroc ? pair(mean.auroc, sd.auroc) : json();
    results.push_back({{"sets", sets},
                       {"f1", pair(mean.f1, sd.f1)},
                       {"accuracy", pair(mean.accuracy, sd.accuracy)},
                       {"auroc", auroc},
                       {"top_features", top}});
    std::cout << sets << ": f1 " << mean.f1 << " +- " << sd.f1 << ", accuracy " << mean.accuracy
              << " +- " << sd.accuracy;
    if (mean.has_auroc) std::cout << ", auroc " << mean.auroc << " +- " << sd.auroc;
    std::cout << '\n';
  }
  const json doc = {{"features", args.features},
                    {"labels", args.labels},
                    {"rows", feats.keys.size()},
                    {"positives", positives},
                    {"results", results}};
  Manifest m;
  m.inputs = {args.features, args.labels};
  m.parameters = {{"sets", args.sets},         {"trees", args.trees},
                  {"depth", args.depth},       {"min_split", args.min_split},
                  {"seed", args.seed},         {"repeats", args.repeats},
                  {"train_fraction", args.train_fraction}};
  write_output(ctx, args.output, doc.dump(2) + "\n", m);
}

namespace {

std::string single(const Config& cfg, const std::string& key, const std::string& fallback) {
  const auto it = cfg.find(key);
  if (it == cfg.end() || it->second.empty()) return fallback;
  if (it->second.size() > 1) throw bad_input("config key '" + key + "' given more than once");
  return it->second.front();
}

std::vector<std::string> list(const Config& cfg, const std::string& key, const std::string& fallback) {
  return split_list(single(cfg, key, fallback));
}

struct Dataset {
  std::string name;
  fs::path path;
  std::string domain;
};

}  // namespace

void run_reproduce(const Context& ctx, const ReproduceArgs& args) {
  const fs::path config_path(args.config);
  const Config cfg = read_config(config_path);
  const fs::path base = config_path.has_parent_path() ? config_path.parent_path() : fs::path(".");
  const auto resolve = [&](const std::string& p) {
    const fs::path path(p);
    return path.is_absolute() ? path : base / path;
  };
  static const std::set<std::string> known = {
      "output",       "seed",         "random",      "epsilon",  "checkpoints", "shuffles",
      "dataset",      "numbering",    "predict",     "node_dthetas", "edge_dthetas", "measures",
      "sets",         "edge_sets",    "repeats",     "trees",    "depth",       "null_model",
      "refresh",      "max_nodes"};
  for (const auto& [key, _] : cfg) {
    if (!known.count(key)) throw bad_input(args.config + ": unknown key '" + key + "'");
  }
  const fs::path out = resolve(single(cfg, "output", "reproduce-out"));
  const std::string where = args.config;
  const auto integer = [&](const std::string& key, std::int64_t fallback) {
    const std::string v = single(cfg, key, "");
    return v.empty() ? fallback : parse_int(v, where + " " + key);
  };
  const std::string numbering = single(cfg, "numbering", "");
  const std::string numbering_path = numbering.empty() ? "" : resolve(numbering).string();
  const auto seed = static_cast<std::uint64_t>(integer("seed", 0));
  const std::string eps_text = single(cfg, "epsilon", "4");
  const double epsilon = parse_double(eps_text, where + " epsilon");

  std::vector<Dataset> datasets;
  const auto ds = cfg.find("dataset");
  if (ds == cfg.end()) throw bad_input(args.config + ": no 'dataset' entries");
  for (const auto& entry : ds->second) {
    const auto parts = split_list(entry);
    if (parts.size() < 2 || parts.size() > 3) {
      throw bad_input(args.config + ": dataset entries are 'name, path[, domain]'");
    }
    datasets.push_back({parts[0], resolve(parts[1]), parts.size() == 3 ? parts[2] : ""});
  }

  json summary = {{"config", args.config}, {"output", out.string()}, {"stages", json::array()}};
  const auto stage = [&](const std::string& name, const std::string& output) {
    std::cout << "[" << name << "] " << output << '\n';
    summary["stages"].push_back({{"stage", name}, {"output", output}});
  };
  const auto sub = [&](const std::string& name) {
    Context c = ctx;
    c.subcommand = name;
    return c;
  };

  std::vector<std::string> cp_files;
  json nonlinearity_summary = json::array();
  const auto checkpoints = static_cast<std::size_t>(integer("checkpoints", 1000));
  const int shuffles = static_cast<int>(integer("shuffles", 5));
  for (const auto& d : datasets) {
    const fs::path dir = out / d.name;
    CountArgs count_args{d.path.string(), numbering_path, checkpoints, (dir / "series.csv").string()};
    run_count(sub("count"), count_args);
    stage("count", count_args.output);

    GtgArgs gtg_args{d.path.string(), numbering_path, (dir / "gtg.json").string()};
    run_gtg(sub("gtg"), gtg_args);
    stage("gtg", gtg_args.output);

    CpArgs cp_args;
    cp_args.input = d.path.string();
    cp_args.numbering = numbering_path;
    cp_args.name = d.name;
    cp_args.random = static_cast<int>(integer("random", 50));
    cp_args.epsilon = epsilon;
    cp_args.seed = seed;
    cp_args.null_model = single(cfg, "null_model", "degree-preserving");
    cp_args.output = (dir / "cp.json").string();
    run_cp(sub("cp"), cp_args);
    cp_files.push_back(cp_args.output);
    stage("cp", cp_args.output);

    if (shuffles > 0) {
      NonlinearityArgs nl;
      nl.input = d.path.string();
      nl.numbering = numbering_path;
      nl.checkpoints = checkpoints;
      nl.shuffles = shuffles;
      nl.seed = seed;
      nl.output = (dir / "nonlinearity.json").string();
      run_nonlinearity(sub("nonlinearity"), nl);
      stage("nonlinearity", nl.output);
    }
  }

  const bool labelled = std::all_of(datasets.begin(), datasets.end(),
                                    [](const Dataset& d) { return !d.domain.empty(); });
  if (datasets.size() >= 2) {
    std::string labels_path;
    if (labelled) {
      std::ostringstream labels;
      labels << "name,domain\n";
      for (const auto& d : datasets) labels << d.name << ',' << d.domain << '\n';
      labels_path = (out / "domains.csv").string();
      Manifest m;
      m.subcommand = "reproduce";
      write_output(ctx, labels_path, labels.str(), m);
    }
    for (const std::string kind : {"transition", "occurrence"}) {
      SimilarityArgs sim{cp_files, labels_path, kind, (out / ("similarity_" + kind + ".csv")).string()};
      run_similarity(sub("similarity"), sim);
      stage("similarity", sim.output);
    }
  }

  const auto predict_names = list(cfg, "predict", "");
  const auto measures = list(cfg, "measures", "in-degree,betweenness,closeness,pagerank");
  const auto node_sets = list(cfg, "sets", "local-nr,local-npp,global-nr,global-npp,global-basic,all");
  const auto edge_sets = list(cfg, "edge_sets", "local-er,global-er,global-basic,all");
  const auto node_dthetas = list(cfg, "node_dthetas", "2");
  const auto edge_dthetas = list(cfg, "edge_dthetas", "");
  json skipped = json::array();
  for (const auto& name : predict_names) {
    const auto it = std::find_if(datasets.begin(), datasets.end(),
                                 [&](const Dataset& d) { return d.name == name; });
    if (it == datasets.end()) throw bad_input(args.config + ": predict names unknown dataset " + name);
    const fs::path dir = out / name / "prediction";
    const auto run_subject = [&](const std::string& subject, const std::vector<std::string>& dthetas,
                                 const std::vector<std::string>& subject_measures,
                                 const std::vector<std::string>& sets) {
      std::map<std::string, std::string> score_files;
      for (const auto& measure : subject_measures) {
        CentralityArgs c;
        c.input = it->path.string();
        c.measure = measure;
        c.max_nodes = static_cast<std::size_t>(integer("max_nodes", 0));
        c.output = (dir / ("centrality_" + measure + ".csv")).string();
        try {
          run_centrality(sub("centrality"), c);
        } catch (const CliError& e) {
          if (e.exit_code() != 1) throw;
          std::cerr << "warning: skipping " << measure << " on " << name << ": " << e.what() << '\n';
          skipped.push_back({{"dataset", name}, {"measure", measure}, {"reason", e.what()}});
          continue;
        }
        score_files[measure] = c.output;
        stage("centrality", c.output);
      }
      for (const auto& dt : dthetas) {
        FeaturesArgs f;
        f.input = it->path.string();
        f.numbering = numbering_path;
        f.dtheta = static_cast<int>(parse_int(dt, where + " dthetas"));
        f.subject = subject;
        f.sets = "all";
        f.refresh = static_cast<std::size_t>(integer("refresh", 1000));
        f.output = (dir / (subject + "_d" + dt + "_features.csv")).string();
        run_features(sub("features"), f);
        stage("features", f.output);
        for (const auto& [measure, scores] : score_files) {
          PredictArgs p;
          p.features = f.output;
          p.labels = scores;
          p.sets = sets;
          p.trees = static_cast<int>(integer("trees", 30));
          p.depth = static_cast<int>(integer("depth", 10));
          p.seed = seed;
          p.repeats = static_cast<int>(integer("repeats", 10));
          p.output = (dir / (subject + "_d" + dt + "_" + measure + "_metrics.json")).string();
          try {
            run_predict(sub("predict"), p);
          } catch (const CliError& e) {
            if (e.exit_code() != 1) throw;
            std::cerr << "warning: prediction skipped: " << e.what() << '\n';
            skipped.push_back({{"dataset", name}, {"measure", measure}, {"dtheta", dt}, {"reason", e.what()}});
            continue;
          }
          stage("predict", p.output);
          SignalsArgs s{f.output, scores, 6,
                        (dir / (subject + "_d" + dt + "_" + measure + "_signals.csv")).string()};
          run_signals(sub("signals"), s);
          stage("signals", s.output);
        }
      }
    };
    run_subject("node", node_dthetas, measures, node_sets);
    if (!edge_dthetas.empty()) run_subject("edge", edge_dthetas, {"edge-betweenness"}, edge_sets);
  }
  summary["skipped"] = skipped;
  Manifest m;
  m.subcommand = "reproduce";
  m.inputs = {args.config};
  for (const auto& d : datasets) m.inputs.push_back(d.path.string());
  write_output(ctx, (out / "summary.json").string(), summary.dump(2) + "\n", m);
}

}  // namespace cli
