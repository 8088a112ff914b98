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

#include <exception>
#include <iostream>
#include <new>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace cli;
  CLI::App app{"Graphlet analysis of temporal directed graphs", "graphlet-lens"};
  app.require_subcommand(1);
  app.set_version_flag("--version", gl_version());
  int threads = gl_default_thread_count();
  app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();

  AtlasArgs atlas;
  auto* atlas_cmd = app.add_subcommand("atlas", "Graphlet, orbit and transition tables");
  auto* dump = atlas_cmd->add_subcommand("dump", "Write the tables as JSON")->fallthrough();
  atlas_cmd->require_subcommand(1);
  dump->add_option("--numbering", atlas.numbering, "Id numbering file");
  dump->add_option("--output,-o", atlas.output, "Output file (stdout if omitted)");

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Graphlet ratio series over the stream");
  count_cmd->add_option("--input,-i", count.input, "Temporal edge list")->required();
  count_cmd->add_option("--checkpoints", count.checkpoints, "Evenly spaced checkpoints")
      ->check(CLI::PositiveNumber)->capture_default_str();
  count_cmd->add_option("--numbering", count.numbering, "Id numbering file");
  count_cmd->add_option("--output,-o", count.output, "Series CSV")->required();

  GtgArgs gtg;
  auto* gtg_cmd = app.add_subcommand("gtg", "Graphlet transition graph");
  gtg_cmd->add_option("--input,-i", gtg.input, "Temporal edge list")->required();
  gtg_cmd->add_option("--numbering", gtg.numbering, "Id numbering file");
  gtg_cmd->add_option("--output,-o", gtg.output, "GTG JSON")->required();

  CpArgs cp;
  auto* cp_cmd = app.add_subcommand("cp", "Characteristic profiles against shuffled replicas");
  cp_cmd->add_option("--input,-i", cp.input, "Temporal edge list")->required();
  cp_cmd->add_option("--name", cp.name, "Graph name (default: input stem)");
  cp_cmd->add_option("--random", cp.random, "Random replicas")->capture_default_str();
  cp_cmd->add_option("--epsilon", cp.epsilon, "Significance smoothing")->capture_default_str();
  cp_cmd->add_option("--seed", cp.seed, "Master seed")->capture_default_str();
  cp_cmd->add_option("--null-model", cp.null_model, "Occurrence null model")
      ->check(CLI::IsMember({"degree-preserving", "time-shuffle"}))->capture_default_str();
  cp_cmd->add_option("--numbering", cp.numbering, "Id numbering file");
  cp_cmd->add_option("--output,-o", cp.output, "CP JSON")->required();

  SimilarityArgs sim;
  auto* sim_cmd = app.add_subcommand("similarity", "Pearson similarity between profiles");
  sim_cmd->add_option("--cps", sim.cps, "CP JSON files")->required()->expected(1, -1);
  sim_cmd->add_option("--labels", sim.labels, "CSV with name,domain columns");
  sim_cmd->add_option("--kind", sim.kind, "Profile to compare")
      ->check(CLI::IsMember({"transition", "occurrence"}))->capture_default_str();
  sim_cmd->add_option("--output,-o", sim.output, "Matrix CSV")->required();

  FeaturesArgs feats;
  auto* feats_cmd = app.add_subcommand("features", "Role features at in-degree threshold events");
  feats_cmd->add_option("--input,-i", feats.input, "Temporal edge list")->required();
  feats_cmd->add_option("--dtheta", feats.dtheta, "In-degree threshold")
      ->check(CLI::PositiveNumber)->capture_default_str();
  feats_cmd->add_option("--subject", feats.subject, "node or edge")
      ->check(CLI::IsMember({"node", "edge"}))->capture_default_str();
  feats_cmd->add_option("--sets", feats.sets, "Comma-separated feature sets")->capture_default_str();
  feats_cmd->add_option("--refresh", feats.refresh, "Structural edges between population refreshes")
      ->check(CLI::PositiveNumber)->capture_default_str();
  feats_cmd->add_option("--numbering", feats.numbering, "Id numbering file");
  feats_cmd->add_option("--output,-o", feats.output, "Feature CSV")->required();

  CentralityArgs cent;
  auto* cent_cmd = app.add_subcommand("centrality", "Centrality scores of the final snapshot");
  cent_cmd->add_option("--input,-i", cent.input, "Temporal edge list")->required();
  cent_cmd->add_option("--measure", cent.measure,
                       "in-degree, betweenness, closeness, pagerank or edge-betweenness")
      ->capture_default_str();
  cent_cmd->add_option("--max-nodes", cent.max_nodes, "Node bound for all-pairs measures (0: default)");
  cent_cmd->add_option("--top", cent.top_fraction, "Fraction labelled important")->capture_default_str();
  cent_cmd->add_option("--output,-o", cent.output, "Scores CSV")->required();

  SignalsArgs sig;
  auto* sig_cmd = app.add_subcommand("signals", "Spearman signal of each role across centrality groups");
  sig_cmd->add_option("--features", sig.features, "Feature CSV")->required();
  sig_cmd->add_option("--centrality", sig.centrality, "Scores CSV")->required();
  sig_cmd->add_option("--groups", sig.groups, "Number of groups")->capture_default_str();
  sig_cmd->add_option("--output,-o", sig.output, "Signals CSV")->required();

  NonlinearityArgs nl;
  auto* nl_cmd = app.add_subcommand("nonlinearity", "Curve nonlinearity of ratio series");
  nl_cmd->add_option("--series", nl.series, "Series CSV files")->expected(0, -1);
  nl_cmd->add_option("--input,-i", nl.input, "Edge list to compare with timestamp shuffles");
  nl_cmd->add_option("--checkpoints", nl.checkpoints, "Checkpoints for --input")->capture_default_str();
  nl_cmd->add_option("--shuffles", nl.shuffles, "Shuffled replicas for --input")->capture_default_str();
  nl_cmd->add_option("--seed", nl.seed, "Shuffle seed")->capture_default_str();
  nl_cmd->add_option("--samples", nl.samples, "Integration samples")
      ->check(CLI::PositiveNumber)->capture_default_str();
  nl_cmd->add_option("--numbering", nl.numbering, "Id numbering file");
  nl_cmd->add_option("--output,-o", nl.output, "Report JSON")->required();

  PredictArgs pred;
  auto* pred_cmd = app.add_subcommand("predict", "Random-forest prediction of important subjects");
  pred_cmd->add_option("--features", pred.features, "Feature CSV")->required();
  pred_cmd->add_option("--labels", pred.labels, "Scores CSV with a top20 column")->required();
  pred_cmd->add_option("--sets", pred.sets, "Feature sets, one evaluation each")
      ->expected(1, -1)->capture_default_str();
  pred_cmd->add_option("--trees", pred.trees, "Trees")->check(CLI::PositiveNumber)->capture_default_str();
  pred_cmd->add_option("--depth", pred.depth, "Maximum depth")->check(CLI::NonNegativeNumber)->capture_default_str();
  pred_cmd->add_option("--min-split", pred.min_split, "Minimum samples to split")->capture_default_str();
  pred_cmd->add_option("--seed", pred.seed, "Master seed")->capture_default_str();
  pred_cmd->add_option("--repeats", pred.repeats, "Random splits")->capture_default_str();
  pred_cmd->add_option("--train-fraction", pred.train_fraction, "Training share")
      ->check(CLI::Range(0.0, 1.0))->capture_default_str();
  pred_cmd->add_option("--top-features", pred.top_features, "Importances to report")->capture_default_str();
  pred_cmd->add_option("--output,-o", pred.output, "Metrics JSON")->required();

  ReproduceArgs repro;
  auto* repro_cmd = app.add_subcommand("reproduce", "Run every stage from a config file");
  repro_cmd->add_option("--config,-c", repro.config, "Config file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  Context ctx;
  ctx.argv.assign(argv, argv + argc);
  ctx.threads = threads;
  try {
    if (atlas_cmd->parsed()) {
      ctx.subcommand = "atlas dump";
      run_atlas(ctx, atlas);
    } else {
      ctx.subcommand = app.get_subcommands().front()->get_name();
      if (count_cmd->parsed()) run_count(ctx, count);
      if (gtg_cmd->parsed()) run_gtg(ctx, gtg);
      if (cp_cmd->parsed()) run_cp(ctx, cp);
      if (sim_cmd->parsed()) run_similarity(ctx, sim);
      if (feats_cmd->parsed()) run_features(ctx, feats);
      if (cent_cmd->parsed()) run_centrality(ctx, cent);
      if (sig_cmd->parsed()) run_signals(ctx, sig);
      if (nl_cmd->parsed()) run_nonlinearity(ctx, nl);
      if (pred_cmd->parsed()) run_predict(ctx, pred);
      if (repro_cmd->parsed()) run_reproduce(ctx, repro);
    }
  } catch (const CliError& e) {
    std::cerr << "graphlet-lens: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::bad_alloc&) {
    std::cerr << "graphlet-lens: out of memory\n";
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "graphlet-lens: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "graphlet-lens: internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
