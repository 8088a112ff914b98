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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path& workdir() {
  static const fs::path dir = [] {
    const auto d = fs::temp_directory_path() / "glens_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int run(const std::string& args) {
  const std::string cmd = std::string("cd '") + workdir().string() + "' && '" + GLENS_CLI_PATH +
                          "' " + args + " >stdout.txt 2>stderr.txt";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(workdir() / p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const fs::path& p, const std::string& body) { std::ofstream(workdir() / p) << body; }

json load_json(const fs::path& p) { return json::parse(slurp(p)); }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) out.push_back(f);
  return out;
}

void write_random_stream(const fs::path& p, std::uint64_t seed, int nodes, int edges) {
  std::mt19937_64 rng(seed);
  std::ostringstream s;
  for (int i = 0; i < edges; ++i) {
    const int u = static_cast<int>(rng() % nodes);
    int v = static_cast<int>(rng() % (nodes - 1));
    if (v >= u) ++v;
    s << u << ' ' << v << ' ' << i << '\n';
  }
  write(p, s.str());
}

std::uint8_t mask_of(std::initializer_list<std::pair<int, int>> edges) {
  std::uint8_t m = 0;
  for (const auto& [a, b] : edges) m |= static_cast<std::uint8_t>(1 << oracle::bit_of(a, b));
  return m;
}

}  // namespace

TEST_CASE("atlas dump reports the class counts") {
  REQUIRE(run("atlas dump -o atlas.json") == 0);
  const auto a = load_json("atlas.json");
  CHECK(a["counts"]["graphlets"] == 13);
  CHECK(a["counts"]["node_orbits"] == 30);
  CHECK(a["counts"]["edge_orbits"] == 30);
  CHECK(a["counts"]["transitions"] == 28);
  CHECK(fs::exists(workdir() / "atlas.json.manifest.json"));
  REQUIRE(run("atlas dump") == 0);
  CHECK(json::parse(slurp("stdout.txt"))["counts"]["graphlets"] == 13);
}

TEST_CASE("count on the three-cycle toy file") {
  write("cycle.txt", "# toy\n0 1 1\n1 2 2\n2 0 3\n");
  REQUIRE(run("count -i cycle.txt -o cycle.csv") == 0);
  const auto rows = lines(slurp("cycle.csv"));
  REQUIRE(rows.size() == 4);
  const auto header = fields(rows[0]);
  const auto last = fields(rows.back());
  const int cycle = oracle::graphlet_of(mask_of({{0, 1}, {1, 2}, {2, 0}}));
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c].rfind("count_", 0) != 0) continue;
    const int k = std::stoi(header[c].substr(6));
    CHECK(std::stoll(last[c]) == (k == cycle ? 1 : 0));
  }
  const auto m = load_json("cycle.csv.manifest.json");
  CHECK(m["subcommand"] == "count");
  CHECK(m["version"] == "0.1.0");
  CHECK(m["results"]["edges"] == 3);
  CHECK(m["inputs"][0] == "cycle.txt");
  CHECK(m["parameters"]["checkpoints"] == 1000);
}

TEST_CASE("bad input exits with status 1") {
  CHECK(run("count -i missing.txt -o x.csv") == 1);
  write("broken.txt", "0 1 1\n1 oops 2\n");
  CHECK(run("count -i broken.txt -o x.csv") == 1);
  CHECK(slurp("stderr.txt").find("line 2") != std::string::npos);
  CHECK(run("no-such-command") == 1);
  CHECK(run("count -i cycle.txt") == 1);
  CHECK(run("--help") == 0);
  CHECK(run("features -i cycle.txt --dtheta 0 -o f.csv") == 1);
  CHECK(run("centrality -i cycle.txt --measure katz -o c.csv") == 1);
}

TEST_CASE("gtg and cp stages") {
  write_random_stream("rand.txt", 1, 40, 600);
  REQUIRE(run("gtg -i rand.txt -o gtg.json") == 0);
  const auto g = load_json("gtg.json");
  CHECK(g["conserved"] == true);
  CHECK(g["edges"].size() == 28);

  REQUIRE(run("cp -i rand.txt --random 6 --seed 3 -o cp1.json") == 0);
  REQUIRE(run("--threads 3 cp -i rand.txt --random 6 --seed 3 --name other -o cp2.json") == 0);
  const auto a = load_json("cp1.json"), b = load_json("cp2.json");
  CHECK(a["transition"]["profile"] == b["transition"]["profile"]);
  CHECK(a["name"] == "rand");
  double norm = 0;
  for (const auto& x : a["transition"]["profile"]) norm += x.get<double>() * x.get<double>();
  CHECK((norm == 0.0 || std::abs(norm - 1.0) < 1e-9));

  write_random_stream("rand2.txt", 2, 40, 600);
  REQUIRE(run("cp -i rand2.txt --random 6 -o cp3.json") == 0);
  write("labels.csv", "name,domain\nrand,x\nother,x\nrand2,y\n");
  REQUIRE(run("similarity --cps cp1.json cp2.json cp3.json --labels labels.csv -o sim.csv") == 0);
  const auto rows = lines(slurp("sim.csv"));
  REQUIRE(rows.size() == 4);
  CHECK(fields(rows[0]) == std::vector<std::string>{"name", "rand", "other", "rand2"});
  const auto sm = load_json("sim.csv.manifest.json");
  CHECK(sm["results"].contains("accuracy"));
}

TEST_CASE("features, centrality, signals and predict") {
  write_random_stream("pred.txt", 5, 80, 1500);
  REQUIRE(run("features -i pred.txt --dtheta 2 -o feats.csv") == 0);
  REQUIRE(run("centrality -i pred.txt --measure in-degree -o deg.csv") == 0);
  const auto header = fields(lines(slurp("deg.csv"))[0]);
  CHECK(header == std::vector<std::string>{"node", "score", "top20", "group"});
  REQUIRE(run("signals --features feats.csv --centrality deg.csv -o sig.csv") == 0);
  CHECK(lines(slurp("sig.csv")).size() == 31);
  REQUIRE(run("predict --features feats.csv --labels deg.csv --sets all local-nr --trees 8 --repeats 2 -o m.json") == 0);
  const auto m = load_json("m.json");
  CHECK(m.dump().find("local-nr") != std::string::npos);
  REQUIRE(run("features -i pred.txt --dtheta 2 --subject edge --sets local-er -o efeats.csv") == 0);
  CHECK(fields(lines(slurp("efeats.csv"))[0])[0] == "src");
  REQUIRE(run("centrality -i pred.txt --measure edge-betweenness -o eb.csv") == 0);
  CHECK(run("centrality -i pred.txt --measure betweenness --max-nodes 3 -o b.csv") == 1);
}

TEST_CASE("nonlinearity against shuffles") {
  REQUIRE(run("nonlinearity -i rand.txt --checkpoints 50 --shuffles 2 -o nl.json") == 0);
  CHECK(fs::exists(workdir() / "nl.json.manifest.json"));
}

TEST_CASE("reproduce runs the configured pipeline") {
  write("run.conf",
        "# small run\n"
        "output = repro\n"
        "seed = 7\n"
        "random = 4\n"
        "checkpoints = 40\n"
        "shuffles = 2\n"
        "dataset = a, rand.txt, x\n"
        "dataset = b, rand2.txt, y\n"
        "predict = a\n"
        "measures = in-degree\n"
        "sets = all\n"
        "repeats = 1\n"
        "trees = 5\n");
  REQUIRE(run("reproduce -c run.conf") == 0);
  const auto s = load_json("repro/summary.json");
  CHECK(s["stages"].size() > 6);
  CHECK(fs::exists(workdir() / "repro/similarity_transition.csv"));
  CHECK(fs::exists(workdir() / "repro/a/cp.json"));
  write("bad.conf", "colour = blue\n");
  CHECK(run("reproduce -c bad.conf") == 1);
}
