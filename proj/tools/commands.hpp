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

#ifndef GRAPHLET_LENS_TOOLS_COMMANDS_HPP_
#define GRAPHLET_LENS_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "cli_support.hpp"

namespace cli {

struct AtlasArgs {
  std::string numbering;
  std::string output;
};

struct CountArgs {
  std::string input;
  std::string numbering;
  std::size_t checkpoints = 1000;
  std::string output;
};

struct GtgArgs {
  std::string input;
  std::string numbering;
  std::string output;
};

struct CpArgs {
  std::string input;
  std::string numbering;
  std::string name;
  int random = 50;
  double epsilon = 4.0;
  std::uint64_t seed = 0;
  std::string null_model = "degree-preserving";
  std::string output;
};

struct SimilarityArgs {
  std::vector<std::string> cps;
  std::string labels;
  std::string kind = "transition";
  std::string output;
};

struct FeaturesArgs {
  std::string input;
  std::string numbering;
  int dtheta = 2;
  std::string subject = "node";
  std::string sets = "all";
  std::size_t refresh = 1000;
  std::string output;
};

struct CentralityArgs {
  std::string input;
  std::string measure = "in-degree";
  std::size_t max_nodes = 0;
  double top_fraction = 0.2;
  std::string output;
};

struct SignalsArgs {
  std::string features;
  std::string centrality;
  int groups = 6;
  std::string output;
};

struct NonlinearityArgs {
  std::vector<std::string> series;
  std::string input;
  std::string numbering;
  std::size_t checkpoints = 1000;
  int shuffles = 5;
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  std::string output;
};

struct PredictArgs {
  std::string features;
  std::string labels;
  std::vector<std::string> sets = {"all"};
  int trees = 30;
  int depth = 10;
  int min_split = 2;
  std::uint64_t seed = 0;
  int repeats = 10;
  double train_fraction = 0.8;
  int top_features = 5;
  std::string output;
};

struct ReproduceArgs {
  std::string config;
};

void run_atlas(const Context& ctx, const AtlasArgs& args);
void run_count(const Context& ctx, const CountArgs& args);
void run_gtg(const Context& ctx, const GtgArgs& args);
void run_cp(const Context& ctx, const CpArgs& args);
void run_similarity(const Context& ctx, const SimilarityArgs& args);
void run_features(const Context& ctx, const FeaturesArgs& args);
void run_centrality(const Context& ctx, const CentralityArgs& args);
void run_signals(const Context& ctx, const SignalsArgs& args);
void run_nonlinearity(const Context& ctx, const NonlinearityArgs& args);
void run_predict(const Context& ctx, const PredictArgs& args);
void run_reproduce(const Context& ctx, const ReproduceArgs& args);

}  // namespace cli

#endif  // GRAPHLET_LENS_TOOLS_COMMANDS_HPP_
