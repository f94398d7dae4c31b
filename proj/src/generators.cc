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

#include "ifcs/generators.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "ifcs/errors.h"

namespace ifcs {
namespace {

std::vector<VertexId> UndirectedNeighbors(const Hin& g, VertexId v) {
  std::vector<VertexId> out;
  const auto a = g.out_neighbors(v);
  const auto b = g.in_neighbors(v);
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

// One walk attempt; empty when it stalls before collecting `size` vertices.
std::vector<VertexId> WalkOnce(const Hin& g,
                               const std::vector<VertexId>& starts,
                               std::size_t size, std::mt19937_64& rng) {
  VertexId at = starts[UniformBelow(rng, starts.size())];
  std::vector<VertexId> collected{at};
  // A walk trapped in a component smaller than `size` must end somewhere.
  const std::size_t max_steps = 64 * size;
  for (std::size_t step = 0; step < max_steps && collected.size() < size;
       ++step) {
    const auto nbrs = UndirectedNeighbors(g, at);
    if (nbrs.empty()) return {};
    at = nbrs[UniformBelow(rng, nbrs.size())];
    if (std::find(collected.begin(), collected.end(), at) == collected.end()) {
      collected.push_back(at);
    }
  }
  if (collected.size() < size) return {};
  return collected;
}

std::string FormatNumber(double x) {
  std::ostringstream os;
  if (x == std::floor(x) && std::abs(x) < 1e15) {
    os << static_cast<long long>(x);
  } else {
    os.setf(std::ios::fixed);
    os.precision(3);
    os << x;
  }
  return os.str();
}

}  // namespace

std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("UniformBelow(0)");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

Motif GenerateMotif(const Hin& g, const MotifGenOptions& options,
                    std::mt19937_64& rng) {
  if (options.size < 3 || options.size > 7) {
    throw InputError("motif size must be in [3, 7]");
  }
  std::vector<VertexId> starts;
  for (VertexId v : g.Vertices()) {
    if (!g.out_neighbors(v).empty() || !g.in_neighbors(v).empty()) {
      starts.push_back(v);
    }
  }
  if (starts.empty()) throw InputError("graph has no edges to walk");

  for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    const std::vector<VertexId> picked = WalkOnce(g, starts, options.size, rng);
    if (picked.empty()) continue;

    std::map<LabelId, std::vector<QueryVertexId>> by_type;
    for (QueryVertexId u = 0; u < picked.size(); ++u) {
      by_type[g.label(picked[u])].push_back(u);
    }
    std::vector<const std::vector<QueryVertexId>*> eligible;
    for (const auto& [label, members] : by_type) {
      if (members.size() >= 2) eligible.push_back(&members);
    }
    if (eligible.empty()) continue;
    const auto& group = *eligible[UniformBelow(rng, eligible.size())];
    const QueryVertexId target = group[UniformBelow(rng, group.size())];

    std::vector<std::string> labels;
    for (VertexId v : picked) labels.push_back(g.labels().Name(g.label(v)));
    std::vector<QueryEdge> edges;
    for (QueryVertexId a = 0; a < picked.size(); ++a) {
      for (QueryVertexId b = 0; b < picked.size(); ++b) {
        if (a != b && g.HasEdge(picked[a], picked[b])) edges.push_back({a, b});
      }
    }
    return Motif(std::move(labels), std::move(edges), target);
  }
  throw InputError("could not draw a motif of size " +
                   std::to_string(options.size) + " after " +
                   std::to_string(options.max_attempts) + " attempts");
}

std::vector<Motif> GenerateMotifs(const Hin& g, const MotifGenOptions& options,
                                  std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Motif> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(GenerateMotif(g, options, rng));
  }
  return out;
}

Hin SampleGraph(const Hin& g, double ratio, std::uint64_t seed) {
  if (!(ratio > 0.0 && ratio <= 1.0)) {
    throw InputError("sample ratio must be in (0, 1]");
  }
  std::vector<VertexId> pool = g.Vertices();
  const auto keep = static_cast<std::size_t>(
      std::llround(ratio * static_cast<double>(pool.size())));
  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates: the first `keep` slots become the sample.
  for (std::size_t i = 0; i < keep; ++i) {
    const std::size_t j = i + UniformBelow(rng, pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(keep);
  std::sort(pool.begin(), pool.end());
  return g.InducedByVertices(pool);
}

std::vector<BenchRow> RunBench(const Hin& g,
                               const std::vector<BenchMotif>& motifs,
                               const std::vector<SearchMode>& modes,
                               const QueryParams& params) {
  std::vector<BenchRow> rows;
  for (const BenchMotif& bm : motifs) {
    for (SearchMode mode : modes) {
      BenchRow row;
      row.motif = bm.name;
      row.size = bm.motif.size();
      row.mode = mode;
      try {
        const SearchStats s = RunQuery(g, bm.motif, params, mode).stats;
        row.counters =
            BenchCounters{static_cast<double>(s.visited_targets),
                          static_cast<double>(s.existence_checks),
                          static_cast<double>(s.instances_enumerated),
                          static_cast<double>(s.bound_computations),
                          static_cast<double>(s.components_pruned),
                          s.wall_time_ms};
      } catch (const BudgetExceeded&) {
        row.counters.reset();
      }
      rows.push_back(std::move(row));
    }
  }

  // Buckets keyed by (size, position of mode in `modes`).
  std::map<std::pair<std::size_t, std::size_t>, std::pair<BenchCounters, int>>
      buckets;
  const std::size_t individual = rows.size();
  for (std::size_t i = 0; i < individual; ++i) {
    const BenchRow& row = rows[i];
    const std::size_t mode_pos =
        std::find(modes.begin(), modes.end(), row.mode) - modes.begin();
    auto& [sum, n] = buckets[{row.size, mode_pos}];
    if (!row.counters) continue;
    const BenchCounters& c = *row.counters;
    sum.visited_targets += c.visited_targets;
    sum.existence_checks += c.existence_checks;
    sum.instances_enumerated += c.instances_enumerated;
    sum.bound_computations += c.bound_computations;
    sum.components_pruned += c.components_pruned;
    sum.wall_time_ms += c.wall_time_ms;
    ++n;
  }
  for (const auto& [key, bucket] : buckets) {
    const auto& [sum, n] = bucket;
    BenchRow agg;
    agg.motif = "avg";
    agg.size = key.first;
    agg.mode = modes[key.second];
    if (n > 0) {
      agg.counters = BenchCounters{
          sum.visited_targets / n,      sum.existence_checks / n,
          sum.instances_enumerated / n, sum.bound_computations / n,
          sum.components_pruned / n,    sum.wall_time_ms / n};
    }
    rows.push_back(std::move(agg));
  }
  return rows;
}

void WriteBenchCsv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "motif,size,mode,visited_targets,existence_checks,"
         "instances_enumerated,bound_computations,components_pruned,"
         "wall_time_ms\n";
  for (const BenchRow& row : rows) {
    out << row.motif << ',' << row.size << ',' << ModeName(row.mode) << ',';
    if (!row.counters) {
      out << ",,,,,budget_exceeded\n";
      continue;
    }
    const BenchCounters& c = *row.counters;
    out << FormatNumber(c.visited_targets) << ','
        << FormatNumber(c.existence_checks) << ','
        << FormatNumber(c.instances_enumerated) << ','
        << FormatNumber(c.bound_computations) << ','
        << FormatNumber(c.components_pruned) << ','
        << FormatNumber(c.wall_time_ms) << '\n';
  }
}

}  // namespace ifcs
