// Copyright 2026 The IFCS Authors
//
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

// ifcs: fairest community search over typed directed graphs.
//
//   ifcs query     --vertices V --edges E --motif M [--mode fva-l] [--k 2]
//   ifcs gen-motif --vertices V --edges E --size 4 --count 10 --seed 1 --out
//   DIR ifcs sample    --vertices V --edges E --ratio 0.2 --seed 1 --out DIR
//   ifcs bench     --vertices V --edges E --motif M... --mode m... [--out CSV]
//
// Exit codes: 0 ok, 1 no community found, 2 input error, 3 budget exceeded.
// IFCS_LOG=trace|debug|info|warn|error|off sets stderr verbosity.

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "ifcs/errors.h"
#include "ifcs/generators.h"
#include "ifcs/hin.h"
#include "ifcs/motif.h"
#include "ifcs/result_json.h"
#include "ifcs/search.h"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitNoCommunity = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct CliConfig {
  std::string vertices;
  std::string edges;
  std::vector<std::string> motifs;
  std::vector<std::string> modes;
  std::size_t k = 2;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  std::string out;
  bool metrics = false;
  std::uint64_t budget = 0;
  bool no_timing = false;
  std::size_t size = 4;
  std::size_t count = 1;
  double ratio = 1.0;
};

void SetUpLogging() {
  auto logger = spdlog::stderr_color_mt("ifcs");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("IFCS_LOG")) {
    spdlog::set_level(spdlog::level::from_str(env));
  }
}

ifcs::QueryParams Params(const CliConfig& c) {
  ifcs::QueryParams p;
  p.k = c.k;
  p.threads = c.threads;
  p.embedding_budget = c.budget;
  return p;
}

ifcs::Hin LoadGraph(const CliConfig& c) {
  ifcs::LoadStats stats;
  ifcs::Hin g = ifcs::LoadGraphFiles(c.vertices, c.edges, &stats);
  spdlog::info("loaded {} vertices, {} edges ({} duplicate edges collapsed)",
               g.num_vertices(), g.num_edges(), stats.duplicate_edges);
  if (stats.duplicate_edges > 0) {
    spdlog::warn("{} duplicate edges collapsed", stats.duplicate_edges);
  }
  return g;
}

std::ofstream OpenOut(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ifcs::InputError("cannot write " + path.string());
  return out;
}

void MakeDir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ifcs::InputError("cannot create directory " + dir);
}

int CmdQuery(const CliConfig& c) {
  const ifcs::Hin g = LoadGraph(c);
  const ifcs::Motif motif = ifcs::LoadMotifFile(c.motifs.front());
  for (const std::string& w : motif.warnings()) spdlog::warn("motif: {}", w);
  const ifcs::SearchMode mode =
      ifcs::ParseMode(c.modes.empty() ? "fva-l" : c.modes.front());

  const ifcs::CommunityResult result =
      ifcs::RunQuery(g, motif, Params(c), mode);
  spdlog::info("{} communities, {} targets visited", result.communities.size(),
               result.stats.visited_targets);

  ifcs::ResultJsonOptions options;
  options.motif_file = c.motifs.front();
  options.k = c.k;
  options.mode = mode;
  options.include_metrics = c.metrics;
  options.include_timing = !c.no_timing;
  const std::string json = ifcs::ResultToJson(g, result, options);
  if (c.out.empty()) {
    std::cout << json;
  } else {
    OpenOut(c.out) << json;
  }
  return result.communities.empty() ? kExitNoCommunity : kExitOk;
}

int CmdGenMotif(const CliConfig& c) {
  const ifcs::Hin g = LoadGraph(c);
  ifcs::MotifGenOptions options;
  options.size = c.size;
  const std::vector<ifcs::Motif> motifs =
      ifcs::GenerateMotifs(g, options, c.count, c.seed);
  MakeDir(c.out);
  for (std::size_t i = 0; i < motifs.size(); ++i) {
    const fs::path path =
        fs::path(c.out) /
        ("motif_s" + std::to_string(c.size) + "_" + std::to_string(i) + ".tsv");
    std::ofstream out = OpenOut(path);
    ifcs::WriteMotif(motifs[i], out);
    spdlog::debug("wrote {}", path.string());
  }
  return kExitOk;
}

int CmdSample(const CliConfig& c) {
  const ifcs::Hin g = LoadGraph(c);
  const ifcs::Hin sample = ifcs::SampleGraph(g, c.ratio, c.seed);
  MakeDir(c.out);
  std::ofstream vout = OpenOut(fs::path(c.out) / "vertices.tsv");
  std::ofstream eout = OpenOut(fs::path(c.out) / "edges.tsv");
  ifcs::WriteGraph(sample, vout, eout);
  spdlog::info("sampled {} of {} vertices", sample.num_vertices(),
               g.num_vertices());
  return kExitOk;
}

int CmdBench(const CliConfig& c) {
  const ifcs::Hin g = LoadGraph(c);
  std::vector<ifcs::BenchMotif> motifs;
  for (const std::string& path : c.motifs) {
    motifs.push_back(
        {fs::path(path).stem().string(), ifcs::LoadMotifFile(path)});
  }
  std::vector<ifcs::SearchMode> modes;
  for (const std::string& m : c.modes) modes.push_back(ifcs::ParseMode(m));
  if (modes.empty()) {
    modes = {ifcs::SearchMode::kBaseline, ifcs::SearchMode::kFva,
             ifcs::SearchMode::kFvaM, ifcs::SearchMode::kFvaL};
  }
  const std::vector<ifcs::BenchRow> rows =
      ifcs::RunBench(g, motifs, modes, Params(c));
  if (c.out.empty()) {
    ifcs::WriteBenchCsv(rows, std::cout);
  } else {
    std::ofstream out = OpenOut(c.out);
    ifcs::WriteBenchCsv(rows, out);
  }
  return kExitOk;
}

void AddGraphOptions(CLI::App* sub, CliConfig& c) {
  sub->add_option("--vertices", c.vertices, "vertex TSV (id, type)")
      ->required();
  sub->add_option("--edges", c.edges, "edge TSV (src, dst)")->required();
}

}  // namespace

int main(int argc, char** argv) {
  SetUpLogging();
  CliConfig c;
  CLI::App app{"Fairest community search over typed directed graphs"};
  app.require_subcommand(1);

  CLI::App* query = app.add_subcommand("query", "run one community query");
  AddGraphOptions(query, c);
  query->add_option("--motif", c.motifs, "motif file")->required()->expected(1);
  query->add_option("--mode", c.modes, "baseline, fva, fva-m or fva-l")
      ->expected(1);
  query->add_option("--k", c.k, "minimum community size");
  query->add_option("--threads", c.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  query->add_option("--seed", c.seed, "unused by query");
  query->add_option("--out", c.out, "result JSON path (default stdout)");
  query->add_flag("--metrics", c.metrics, "append community metrics");
  query->add_option("--budget", c.budget,
                    "search-state limit per anchor (0 = unlimited)");
  query->add_flag("--no-timing", c.no_timing, "write wall_time_ms as 0");

  CLI::App* gen = app.add_subcommand("gen-motif", "draw random-walk motifs");
  AddGraphOptions(gen, c);
  gen->add_option("--size", c.size, "query vertices per motif")
      ->check(CLI::Range(3, 7));
  gen->add_option("--count", c.count, "number of motifs");
  gen->add_option("--seed", c.seed, "random seed");
  gen->add_option("--out", c.out, "output directory")->required();

  CLI::App* sample = app.add_subcommand("sample", "uniform vertex sample");
  AddGraphOptions(sample, c);
  sample->add_option("--ratio", c.ratio, "fraction of vertices kept")
      ->required();
  sample->add_option("--seed", c.seed, "random seed");
  sample->add_option("--out", c.out, "output directory")->required();

  CLI::App* bench = app.add_subcommand("bench", "per-mode statistics as CSV");
  AddGraphOptions(bench, c);
  bench->add_option("--motif", c.motifs, "motif files")->required();
  bench->add_option("--mode", c.modes, "modes (default all four)");
  bench->add_option("--k", c.k, "minimum community size");
  bench->add_option("--threads", c.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  bench->add_option("--budget", c.budget,
                    "search-state limit per anchor (0 = unlimited)");
  bench->add_option("--out", c.out, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (query->parsed()) return CmdQuery(c);
    if (gen->parsed()) return CmdGenMotif(c);
    if (sample->parsed()) return CmdSample(c);
    return CmdBench(c);
  } catch (const ifcs::BudgetExceeded& e) {
    spdlog::error("{}", e.what());
    return kExitBudget;
  } catch (const ifcs::InputError& e) {
    spdlog::error("{}", e.what());
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    spdlog::error("{}", e.what());
    return kExitInput;
  }
}
