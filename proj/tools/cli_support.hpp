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

#ifndef GRAPHLET_LENS_TOOLS_CLI_SUPPORT_HPP_
#define GRAPHLET_LENS_TOOLS_CLI_SUPPORT_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphlet_lens/graphlet_lens.h"
#include "json.hpp"

namespace cli {

using nlohmann::json;
namespace fs = std::filesystem;

/// Carries the process exit code: 1 for bad input, 2 for internal failures.
class CliError : public std::runtime_error {
 public:
  CliError(const std::string& what, int exit_code)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

inline CliError bad_input(const std::string& what) { return CliError(what, 1); }

/// Throws CliError for any status other than GL_OK.
void check(gl_status status, const std::string& context);

template <class T, void (*Free)(T*)>
struct Releaser {
  void operator()(T* p) const { Free(p); }
};
using Atlas = std::unique_ptr<gl_atlas, Releaser<gl_atlas, gl_atlas_free>>;
using Graph = std::unique_ptr<gl_graph, Releaser<gl_graph, gl_graph_free>>;
using Series = std::unique_ptr<gl_series, Releaser<gl_series, gl_series_free>>;
using Features = std::unique_ptr<gl_features, Releaser<gl_features, gl_features_free>>;
using Scores = std::unique_ptr<gl_scores, Releaser<gl_scores, gl_scores_free>>;
using Forest = std::unique_ptr<gl_forest, Releaser<gl_forest, gl_forest_free>>;

Atlas make_atlas(const std::string& numbering_path);
Graph load_graph(const fs::path& path);

/// Global state shared by all subcommands of one invocation.
struct Context {
  std::vector<std::string> argv;
  std::string subcommand;
  int threads = 0;
};

/// Metadata written next to every output as <output>.manifest.json.
struct Manifest {
  std::string subcommand;
  std::vector<std::string> inputs;
  json parameters = json::object();
  json results = json::object();
  std::vector<std::string> outputs;
};

/// Writes `content` to `path` (creating parent directories) and the
/// manifest beside it.
void write_output(const Context& ctx, const fs::path& path, const std::string& content,
                  Manifest manifest);

/// Minimal comma-separated table without quoting.
struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const;
  bool has_column(const std::string& name) const;
};
Csv read_csv(const fs::path& path);
double parse_double(const std::string& s, const std::string& where);
std::int64_t parse_int(const std::string& s, const std::string& where);

std::string format_double(double x);

/// "key = value" lines with '#' comments and optional quotes; repeated keys
/// accumulate.
using Config = std::map<std::string, std::vector<std::string>>;
Config read_config(const fs::path& path);
std::vector<std::string> split_list(const std::string& s);

}  // namespace cli

#endif  // GRAPHLET_LENS_TOOLS_CLI_SUPPORT_HPP_
