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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ifcs/digraph.h"
#include "ifcs/fairness.h"
#include "ifcs/iso_engine.h"
#include "ifcs/metrics.h"
#include "ifcs/result_json.h"
#include "ifcs/search.h"
#include "oracle.h"

namespace ifcs {
namespace {

using Clock = std::chrono::steady_clock;

double MsSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

// --- 1 -------------------------------------------------------------------

Outcome ExampleScores() {
  const auto start = Clock::now();
  const double a = FairnessScore(std::vector<ActiveLevel>{12, 2, 2, 2, 2});
  const double b = FairnessScore(std::vector<ActiveLevel>{2, 2, 2});
  const double ms = MsSince(start);
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "FS[12,2,2,2,2]=%.15g FS[2,2,2]=%.15g, %.3f ms", a, b, ms);
  return {std::abs(a - 0.4) <= 1e-12 && std::abs(b) <= 1e-12 && ms < 1.0, buf};
}

// --- 2 -------------------------------------------------------------------

Outcome FormulaEquivalence() {
  const auto start = Clock::now();
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::size_t> size_dist(1, 200);
  std::uniform_int_distribution<ActiveLevel> value_dist(1, 1000000);
  double worst = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = size_dist(rng);
    std::vector<ActiveLevel> s(n);
    switch (trial % 4) {
      case 0:  // all equal
        std::fill(s.begin(), s.end(), value_dist(rng));
        break;
      case 1: {  // two distinct values
        const ActiveLevel lo = value_dist(rng), hi = value_dist(rng);
        for (auto& x : s) x = rng() % 2 ? lo : hi;
        break;
      }
      default:
        for (auto& x : s) x = value_dist(rng);
    }
    const double pairwise = FairnessScore(s);
    std::sort(s.begin(), s.end());
    const double ranked = FairnessScoreSorted(s);
    worst = std::max(worst, std::abs(pairwise - ranked));
  }
  const double ms = MsSince(start);
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "max |diff| = %.3g over 10000 multisets, %.0f ms", worst, ms);
  return {worst <= 1e-12 && ms < 5000, buf};
}

// --- 3 -------------------------------------------------------------------

// All non-decreasing sequences of length n over [1, hi].
void Multisets(std::size_t n, ActiveLevel hi,
               std::vector<std::vector<ActiveLevel>>& out) {
  std::vector<ActiveLevel> cur;
  std::function<void(ActiveLevel)> rec = [&](ActiveLevel lo) {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (ActiveLevel v = lo; v <= hi; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(1);
}

Outcome LowerBoundValidity() {
  const auto start = Clock::now();
  constexpr std::size_t kMaxC = 8;
  constexpr ActiveLevel kMaxLevel = 6;
  std::vector<std::vector<std::vector<ActiveLevel>>> by_size(kMaxC + 1);
  for (std::size_t n = 0; n <= kMaxC; ++n) Multisets(n, kMaxLevel, by_size[n]);

  std::size_t checks = 0, violations = 0;
  for (std::size_t c = 1; c <= kMaxC; ++c) {
    for (std::size_t s = 1; s <= c; ++s) {
      for (const auto& observed : by_size[s]) {
        const Fraction lb = ExactLowerBound(PartialObservation{observed, c});
        // Completions with 0 .. c - s further members.
        oracle::Rational best{1, 1};
        for (std::size_t r = 0; r + s <= c; ++r) {
          for (const auto& extra : by_size[r]) {
            std::vector<std::uint64_t> all(observed.begin(), observed.end());
            all.insert(all.end(), extra.begin(), extra.end());
            const oracle::Rational fs = oracle::GiniPairwiseExact(all);
            if (fs < best) best = fs;
          }
        }
        ++checks;
        if (lb.num * best.den > best.num * lb.den) ++violations;
      }
    }
  }
  const double ms = MsSince(start);
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%zu violations over %zu observations, %.0f ms", violations,
                checks, ms);
  return {violations == 0 && ms < 60000, buf};
}

// --- 4, 5, 6 -------------------------------------------------------------

constexpr SearchMode kModes[] = {SearchMode::kBaseline, SearchMode::kFva,
                                 SearchMode::kFvaM, SearchMode::kFvaL};

struct RandomSuite {
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  std::size_t order_violations = 0;
  std::size_t strict_reductions = 0;
  std::size_t soundness_violations = 0;
  std::size_t nonempty = 0;
  double ms = 0;
  std::string first_failure;
};

bool SameAsOracle(const CommunityResult& got,
                  const oracle::OracleResult& want) {
  if (got.communities.size() != want.fairest.size()) return false;
  for (std::size_t i = 0; i < want.fairest.size(); ++i) {
    const Community& c = got.communities[i];
    const oracle::OracleCommunity& o = want.fairest[i];
    if (c.members != o.members) return false;
    if (!std::equal(c.levels.begin(), c.levels.end(), o.levels.begin(),
                    o.levels.end())) {
      return false;
    }
    if (c.exact_score.num * o.score.den != o.score.num * c.exact_score.den) {
      return false;
    }
    if (std::abs(c.fairness_score - o.score_double) > 1e-12) return false;
  }
  return true;
}

bool FiltersSound(const oracle::RandomCase& rc,
                  const oracle::OracleResult& want) {
  const MotifPlan plan(rc.m, rc.g.labels());
  QueryParams params;
  params.k = rc.k;

  ExplorationResult ex = ExplorationFilter(rc.g, plan, params);
  for (const auto& comp : want.components) {
    if (comp.size() < rc.k) continue;
    for (VertexId v : comp) {
      if (!ex.cm_graph.contains(v)) return false;
    }
  }

  Hin base = rc.g;
  const auto targets = rc.g.VerticesOfType(plan.target_label());
  const std::vector<VertexId> fixpoint = DeletionFixpoint(
      base, plan, std::vector<VertexId>(targets.begin(), targets.end()),
      params);
  if (std::set<VertexId>(fixpoint.begin(), fixpoint.end()) != want.survivors) {
    return false;
  }

  std::vector<VertexId> expected;
  std::set_difference(fixpoint.begin(), fixpoint.end(),
                      ex.dropped_small.begin(), ex.dropped_small.end(),
                      std::back_inserter(expected));
  const std::vector<VertexId> survivors =
      MessagePassing(ex.reduced, plan, ex.cm_graph, params);
  return survivors == expected;
}

RandomSuite RunRandomSuite() {
  const auto start = Clock::now();
  RandomSuite suite;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const oracle::RandomCase rc = oracle::MakeRandomCase(seed);
    const oracle::OracleResult want = oracle::GlobalSearch(rc.g, rc.m, rc.k);
    QueryParams params;
    params.k = rc.k;
    params.threads = 1 + seed % 3;

    std::map<SearchMode, std::uint64_t> visited;
    bool ok = true;
    for (SearchMode mode : kModes) {
      const CommunityResult got = RunQuery(rc.g, rc.m, params, mode);
      visited[mode] = got.stats.visited_targets;
      ok = ok && SameAsOracle(got, want);
    }
    ++suite.cases;
    suite.nonempty += !want.fairest.empty();
    if (!ok) {
      ++suite.mismatches;
      if (suite.first_failure.empty()) {
        suite.first_failure = "criterion 4 seed " + std::to_string(seed);
      }
    }
    const auto base = visited[SearchMode::kBaseline];
    const auto fva_m = visited[SearchMode::kFvaM];
    const auto fva_l = visited[SearchMode::kFvaL];
    if (!(fva_l <= fva_m && fva_m <= base)) ++suite.order_violations;
    suite.strict_reductions += fva_l < base;
    if (!FiltersSound(rc, want)) {
      ++suite.soundness_violations;
      if (suite.first_failure.empty()) {
        suite.first_failure = "criterion 6 seed " + std::to_string(seed);
      }
    }
  }
  suite.ms = MsSince(start);
  return suite;
}

// --- 7 -------------------------------------------------------------------

Outcome Determinism() {
  std::vector<oracle::RandomCase> cases;
  for (std::uint64_t seed : {11u, 42u, 77u, 123u}) {
    cases.push_back(oracle::MakeRandomCase(seed));
  }
  std::size_t queries = 0, differing = 0;
  for (const auto& rc : cases) {
    for (SearchMode mode : kModes) {
      ResultJsonOptions opts;
      opts.motif_file = "motif.tsv";
      opts.k = rc.k;
      opts.mode = mode;
      opts.include_metrics = true;
      opts.include_timing = false;
      std::string reference;
      for (unsigned threads : {1u, 2u, 8u}) {
        for (int rep = 0; rep < 5; ++rep) {
          QueryParams params;
          params.k = rc.k;
          params.threads = threads;
          const std::string json =
              ResultToJson(rc.g, RunQuery(rc.g, rc.m, params, mode), opts);
          if (reference.empty()) reference = json;
          differing += json != reference;
        }
      }
      ++queries;
    }
  }
  char buf[160];
  std::snprintf(
      buf, sizeof buf,
      "%zu queries x 5 repeats x threads {1,2,8}: %zu differing outputs",
      queries, differing);
  return {differing == 0, buf};
}

// --- 8 -------------------------------------------------------------------

Digraph Mutual(std::size_t n,
               const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  Digraph g(n);
  for (auto [a, b] : pairs) {
    g.AddEdge(a, b);
    g.AddEdge(b, a);
  }
  return g;
}

Outcome MetricsSanity() {
  struct Shape {
    std::string name;
    Digraph mg;
    std::vector<VertexId> members;
    std::vector<std::size_t> r_degrees;
    std::map<std::size_t, double> histogram;
    double density;
    std::size_t diameter;
  };
  std::vector<Shape> shapes;
  shapes.push_back({"triangle",
                    Mutual(3, {{0, 1}, {1, 2}, {0, 2}}),
                    {0, 1, 2},
                    {2, 2, 2},
                    {{2, 1.0}},
                    1.0,
                    1});
  shapes.push_back({"path",
                    Mutual(4, {{0, 1}, {1, 2}, {2, 3}}),
                    {0, 1, 2, 3},
                    {1, 2, 2, 1},
                    {{1, 0.5}, {2, 0.5}},
                    0.75,
                    3});
  shapes.push_back({"star",
                    Mutual(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}),
                    {0, 1, 2, 3, 4},
                    {4, 1, 1, 1, 1},
                    {{1, 0.8}, {4, 0.2}},
                    0.8,
                    2});
  std::string failed;
  for (const Shape& s : shapes) {
    const bool ok = RDegrees(s.mg, s.members) == s.r_degrees &&
                    RDegreeHistogram(s.mg, s.members) == s.histogram &&
                    Density(s.mg, s.members) == s.density &&
                    MDistanceDiameter(s.mg, s.members) == s.diameter;
    if (!ok) failed += " " + s.name;
  }
  return {failed.empty(), failed.empty() ? "M-triangle, M-path, M-star exact"
                                         : "mismatch:" + failed};
}

bool Report(int id, const std::string& title, const Outcome& o) {
  std::printf("[%s] %d. %s: %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(),
              o.detail.c_str());
  std::fflush(stdout);
  return o.pass;
}

}  // namespace
}  // namespace ifcs

int main() {
  using namespace ifcs;
  bool all = true;
  all &= Report(1, "example fairness scores", ExampleScores());
  all &= Report(2, "pairwise vs ranked formula", FormulaEquivalence());
  all &= Report(3, "lower-bound validity", LowerBoundValidity());

  const RandomSuite suite = RunRandomSuite();
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%zu/%zu cases match the global oracle in all modes "
                "(%zu with a community), %.0f ms%s%s",
                suite.cases - suite.mismatches, suite.cases, suite.nonempty,
                suite.ms, suite.first_failure.empty() ? "" : "; first: ",
                suite.first_failure.c_str());
  all &= Report(4, "cross-mode equivalence",
                {suite.mismatches == 0 && suite.ms < 600000, buf});
  const double strict_share =
      static_cast<double>(suite.strict_reductions) / suite.cases;
  std::snprintf(buf, sizeof buf,
                "%zu ordering violations; FVA-L < Baseline on %zu/%zu (%.1f%%)",
                suite.order_violations, suite.strict_reductions, suite.cases,
                100 * strict_share);
  all &= Report(5, "pruning-efficiency ordering",
                {suite.order_violations == 0 && strict_share >= 0.30, buf});
  std::snprintf(buf, sizeof buf, "%zu violations over %zu cases",
                suite.soundness_violations, suite.cases);
  all &= Report(6, "filter soundness", {suite.soundness_violations == 0, buf});

  all &= Report(7, "determinism", Determinism());
  all &= Report(8, "metrics sanity", MetricsSanity());
  return all ? 0 : 1;
}
