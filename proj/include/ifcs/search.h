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

#ifndef IFCS_SEARCH_H_
#define IFCS_SEARCH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ifcs/digraph.h"
#include "ifcs/fairness.h"
#include "ifcs/hin.h"
#include "ifcs/iso_engine.h"
#include "ifcs/motif.h"

namespace ifcs {

// Baseline: fixpoint deletion loop + full enumeration.
// Fva: exploration filter, then the baseline deletion loop, then the
//   per-component traversal.
// FvaM: as Fva with message passing replacing the deletion loop.
// FvaL: as FvaM with lower-bound pruning of unfair components.
enum class SearchMode { kBaseline, kFva, kFvaM, kFvaL };

std::string_view ModeName(SearchMode mode);
// Accepts "baseline", "fva", "fva-m", "fva-l". Throws InputError otherwise.
SearchMode ParseMode(std::string_view name);

struct QueryParams {
  // Minimum community size.
  std::size_t k = 2;
  // Search-state limit per anchored enumeration; 0 = unlimited.
  std::uint64_t embedding_budget = 0;
  unsigned threads = 1;
};

struct SearchStats {
  // Target vertices whose full instance enumeration ran.
  std::uint64_t visited_targets = 0;
  std::uint64_t existence_checks = 0;
  std::uint64_t instances_enumerated = 0;
  std::uint64_t bound_computations = 0;
  std::uint64_t components_pruned = 0;
  // Target-type vertices still in play after each stage. Stages a mode
  // does not run carry the previous count forward.
  std::uint64_t survivors_after_nlf = 0;
  std::uint64_t survivors_after_exploration = 0;
  std::uint64_t survivors_after_message_passing = 0;
  double wall_time_ms = 0;
};

struct Community {
  std::vector<VertexId> members;    // ascending
  std::vector<ActiveLevel> levels;  // levels[i] belongs to members[i]
  double fairness_score = 0;
  Fraction exact_score;
};

struct CommunityResult {
  // Every maximal community of size >= k attaining the minimum score,
  // ordered by smallest member.
  std::vector<Community> communities;
  // Unset when no community qualifies.
  std::optional<double> fairness_score;
  // M-neighbor edges out of the reported members.
  Digraph m_graph;
  SearchStats stats;
};

// Candidate region around one target vertex: per-query-vertex candidates
// after forward exploration and backward refinement, plus the data edges
// that can realize motif edges between those candidates.
struct CandidateRegion {
  CandidateSets candidates;
  std::vector<Edge> edges;  // sorted, unique
};

// Empty optional when some query vertex ends up without candidates.
std::optional<CandidateRegion> ExploreRegion(const Hin& g,
                                             const MotifPlan& plan,
                                             VertexId anchor);

struct ExplorationResult {
  // Candidate target vertices and their candidate M-neighbor links.
  Digraph cm_graph;
  // Input graph restricted to the surviving candidate regions, with every
  // target-type vertex outside the CM-graph removed.
  Hin reduced;
  // Target vertices dropped because their CM-graph component had fewer
  // than k vertices.
  std::vector<VertexId> dropped_small;
};

ExplorationResult ExplorationFilter(const Hin& g, const MotifPlan& plan,
                                    const QueryParams& params,
                                    SearchStats* stats = nullptr);

// Deletion loop: every round checks all `targets` still alive in `g` and
// deletes those without an instance around them, until a round deletes
// nothing. Deleted vertices are also removed from `cm` when given. Returns
// the survivors, ascending.
std::vector<VertexId> DeletionFixpoint(Hin& g, const MotifPlan& plan,
                                       std::span<const VertexId> targets,
                                       const QueryParams& params,
                                       SearchStats* stats = nullptr,
                                       Digraph* cm = nullptr);

// Vertices checked in each round of message passing.
using RoundTrace = std::vector<std::vector<VertexId>>;

// Worklist verification over the CM-graph. Round one checks every CM-graph
// vertex; a vertex is checked again only when one of its CM-graph
// out-neighbors was deleted in the previous round. Failures are deleted
// from `g` and `cm`. Returns the survivors, ascending.
std::vector<VertexId> MessagePassing(Hin& g, const MotifPlan& plan, Digraph& cm,
                                     const QueryParams& params,
                                     SearchStats* stats = nullptr,
                                     RoundTrace* trace = nullptr);

CommunityResult BaselineSearch(const Hin& g, const Motif& m,
                               const QueryParams& params);

// mode must be kFva, kFvaM or kFvaL.
CommunityResult OptimizedSearch(const Hin& g, const Motif& m,
                                const QueryParams& params, SearchMode mode);

// Dispatches on `mode` and records wall time.
CommunityResult RunQuery(const Hin& g, const Motif& m,
                         const QueryParams& params, SearchMode mode);

}  // namespace ifcs

#endif  // IFCS_SEARCH_H_
