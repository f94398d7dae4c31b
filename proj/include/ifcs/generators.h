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

#ifndef IFCS_GENERATORS_H_
#define IFCS_GENERATORS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ifcs/hin.h"
#include "ifcs/motif.h"
#include "ifcs/search.h"

namespace ifcs {

// Uniform draw in [0, n) by rejection, so that sequences depend only on
// the mt19937_64 stream (which the standard fixes) and not on the library's
// distribution implementation.
std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t n);

struct MotifGenOptions {
  std::size_t size = 4;             // vertices per motif, in [3, 7]
  std::size_t max_attempts = 1000;  // rejected walks before giving up
};

// Random-walk motif: walks the undirected projection from a uniformly drawn
// vertex, collecting distinct vertices until `size` are reached (restarting
// on dead ends), takes the induced typed subgraph, and picks the target
// uniformly among the vertices of a type drawn uniformly from the types
// occurring at least twice. Throws InputError if `max_attempts` walks fail.
Motif GenerateMotif(const Hin& g, const MotifGenOptions& options,
                    std::mt19937_64& rng);

std::vector<Motif> GenerateMotifs(const Hin& g, const MotifGenOptions& options,
                                  std::size_t count, std::uint64_t seed);

// Uniform sample of round(ratio * |V|) vertices and the edges among them.
// Throws InputError unless 0 < ratio <= 1.
Hin SampleGraph(const Hin& g, double ratio, std::uint64_t seed);

struct BenchMotif {
  std::string name;
  Motif motif;
};

// Bench counters; fractional only on aggregate rows.
struct BenchCounters {
  double visited_targets = 0;
  double existence_checks = 0;
  double instances_enumerated = 0;
  double bound_computations = 0;
  double components_pruned = 0;
  double wall_time_ms = 0;
};

struct BenchRow {
  std::string motif;  // "avg" on aggregate rows
  std::size_t size = 0;
  SearchMode mode = SearchMode::kBaseline;
  // Unset when the run exceeded its embedding budget (or, for aggregates,
  // when every run in the bucket did).
  std::optional<BenchCounters> counters;
};

// Runs every (motif, mode) pair sequentially and appends one aggregate row
// per (motif size, mode) bucket with counters averaged over the successful
// runs.
std::vector<BenchRow> RunBench(const Hin& g,
                               const std::vector<BenchMotif>& motifs,
                               const std::vector<SearchMode>& modes,
                               const QueryParams& params);

void WriteBenchCsv(const std::vector<BenchRow>& rows, std::ostream& out);

}  // namespace ifcs

#endif  // IFCS_GENERATORS_H_
