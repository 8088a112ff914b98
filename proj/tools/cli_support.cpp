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

#include "cli_support.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cli {

void check(gl_status status, const std::string& context) {
  if (status == GL_OK) return;
  std::string message = context + ": " + gl_status_name(status) + ": " + gl_last_error();
  const bool internal = status == GL_ERR_INTERNAL || status == GL_ERR_MEMORY;
  throw CliError(message, internal ? 2 : 1);
}

Atlas make_atlas(const std::string& numbering_path) {
  gl_atlas* raw = nullptr;
  check(gl_atlas_create(numbering_path.empty() ? nullptr : numbering_path.c_str(), &raw),
        "building atlas");
  return Atlas(raw);
}

Graph load_graph(const fs::path& path) {
  gl_graph* raw = nullptr;
  check(gl_graph_load(path.string().c_str(), &raw), "loading " + path.string());
  return Graph(raw);
}

void write_output(const Context& ctx, const fs::path& path, const std::string& content,
                  Manifest manifest) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw bad_input("cannot write " + path.string());
    out << content;
  }
  manifest.outputs.insert(manifest.outputs.begin(), path.string());
  json m = {
      {"tool", "graphlet-lens"},
      {"version", gl_version()},
      {"subcommand", manifest.subcommand.empty() ? ctx.subcommand : manifest.subcommand},
      {"argv", ctx.argv},
      {"inputs", manifest.inputs},
      {"parameters", manifest.parameters},
      {"results", manifest.results},
      {"threads", ctx.threads},
      {"outputs", manifest.outputs},
  };
  std::ofstream mout(path.string() + ".manifest.json", std::ios::binary);
  if (!mout) throw bad_input("cannot write manifest for " + path.string());
  mout << m.dump(2) << '\n';
}

std::size_t Csv::column(const std::string& name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw bad_input("missing CSV column " + name);
  return static_cast<std::size_t>(it - header.begin());
}

bool Csv::has_column(const std::string& name) const {
  return std::find(header.begin(), header.end(), name) != header.end();
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

Csv read_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw bad_input("cannot open " + path.string());
  Csv csv;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    auto fields = split_fields(line);
    for (auto& f : fields) f = trim(f);
    if (csv.header.empty()) {
      csv.header = std::move(fields);
      continue;
    }
    if (fields.size() != csv.header.size()) {
      throw bad_input(path.string() + " line " + std::to_string(line_no) + ": expected " +
                      std::to_string(csv.header.size()) + " fields, found " +
                      std::to_string(fields.size()));
    }
    csv.rows.push_back(std::move(fields));
  }
  if (csv.header.empty()) throw bad_input(path.string() + " is empty");
  return csv;
}

double parse_double(const std::string& s, const std::string& where) {
  try {
    std::size_t used = 0;
    const double x = std::stod(s, &used);
    if (used == s.size()) return x;
  } catch (const std::exception&) {
  }
  throw bad_input(where + ": not a number: '" + s + "'");
}

std::int64_t parse_int(const std::string& s, const std::string& where) {
  std::int64_t x = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw bad_input(where + ": not an integer: '" + s + "'");
  }
  return x;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Config read_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw bad_input("cannot open config " + path.string());
  Config cfg;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw bad_input(path.string() + " line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    value.erase(std::remove(value.begin(), value.end(), '"'), value.end());
    if (key.empty()) throw bad_input(path.string() + " line " + std::to_string(line_no) + ": empty key");
    cfg[key].push_back(value);
  }
  return cfg;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace cli
