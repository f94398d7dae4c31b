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

#ifndef IFCS_ISO_ENGINE_H_
#define IFCS_ISO_ENGINE_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ifcs/hin.h"
#include "ifcs/motif.h"

namespace ifcs {

// Direction bits of a motif adjacency, seen from the owning vertex:
// kOut means owner -> neighbor, kIn means neighbor -> owner.
enum Direction : std::uint8_t { kOut = 1, kIn = 2 };

struct PlanNeighbor {
  QueryVertexId vertex;
  std::uint8_t dirs;
};

// A motif compiled against one graph's label dictionary: label codes, the
// BFS matching order, earlier/later neighbor splits, per-vertex NLF
// requirements, and the automorphisms that fix the target.
class MotifPlan {
 public:
  MotifPlan(const Motif& motif, const LabelDictionary& labels);

  const Motif& motif() const { return motif_; }
  const BfsOrder& bfs() const { return bfs_; }
  std::size_t size() const { return motif_.size(); }
  QueryVertexId target() const { return motif_.target(); }

  // kNoLabel when the graph has no vertex of that type.
  LabelId label(QueryVertexId u) const { return labels_[u]; }
  LabelId target_label() const { return labels_[motif_.target()]; }
  // False when some motif type is absent from the graph (no instances).
  bool satisfiable() const { return satisfiable_; }

  std::span<const PlanNeighbor> neighbors(QueryVertexId u) const {
    return neighbors_[u];
  }
  // Neighbors placed before / after `u` in the BFS order.
  std::span<const PlanNeighbor> earlier(QueryVertexId u) const {
    return earlier_[u];
  }
  std::span<const PlanNeighbor> later(QueryVertexId u) const {
    return later_[u];
  }
  // The earliest-placed earlier neighbor; undefined for the target.
  const PlanNeighbor& parent(QueryVertexId u) const { return earlier_[u][0]; }

  // Per-label in/out degree of `u` inside the motif, sorted by label.
  std::span<const NlfEntry> signature(QueryVertexId u) const {
    return signatures_[u];
  }

  std::span<const QueryVertexId> target_type_vertices() const {
    return target_type_vertices_;
  }

  // Non-identity automorphisms fixing the target; perm[u] is the image of u.
  const std::vector<std::vector<QueryVertexId>>& automorphisms() const {
    return automorphisms_;
  }

 private:
  Motif motif_;
  BfsOrder bfs_;
  std::vector<LabelId> labels_;
  bool satisfiable_ = true;
  std::vector<std::vector<PlanNeighbor>> neighbors_;
  std::vector<std::vector<PlanNeighbor>> earlier_;
  std::vector<std::vector<PlanNeighbor>> later_;
  std::vector<std::vector<NlfEntry>> signatures_;
  std::vector<QueryVertexId> target_type_vertices_;
  std::vector<std::vector<QueryVertexId>> automorphisms_;
};

// True iff the data pair (v, w) carries every edge that `dirs` demands.
bool PairMatches(const Hin& g, VertexId v, VertexId w, std::uint8_t dirs);

// Neighborhood label frequency test: v has u's type and, for every label
// around u, at least u's per-label in- and out-degree.
bool NlfPass(const Hin& g, const MotifPlan& plan, QueryVertexId u, VertexId v);

// Per-query-vertex candidate sets, each sorted ascending.
using CandidateSets = std::vector<std::vector<VertexId>>;

// Star constraint against neighbors placed before `u` in the BFS order:
// every such neighbor u' has a candidate in cand[u'] adjacent to `v` with
// the motif's edge direction(s).
bool StarCheckForward(const Hin& g, const MotifPlan& plan, QueryVertexId u,
                      VertexId v, const CandidateSets& cand);
// Same for neighbors placed after `u`.
bool StarCheckBackward(const Hin& g, const MotifPlan& plan, QueryVertexId u,
                       VertexId v, const CandidateSets& cand);

// Search-state limit per anchored call; 0 disables the limit. Exceeding it
// throws BudgetExceeded.
struct MatchBudget {
  std::uint64_t max_states = 0;
};

// One instance, as the image of each query vertex (indexed by query id).
// Among the embeddings of one instance (related by target-fixing
// automorphisms) only the lexicographically smallest mapping is reported.
using InstanceVisitor = std::function<void(std::span<const VertexId>)>;

// Whether some instance maps the target to `anchor`. Stops at the first
// embedding. False for dead anchors or anchors of the wrong type.
bool ExistsInstanceAround(const Hin& g, const MotifPlan& plan, VertexId anchor,
                          MatchBudget budget = {});

// Visits each distinct instance around `anchor` once and returns the
// number visited. `visitor` may be empty.
std::uint64_t EnumerateInstancesAround(const Hin& g, const MotifPlan& plan,
                                       VertexId anchor,
                                       const InstanceVisitor& visitor,
                                       MatchBudget budget = {});

// Target-type data vertices of an instance other than the anchor, sorted
// and unique.
std::vector<VertexId> TargetTypeMembers(const MotifPlan& plan,
                                        std::span<const VertexId> mapping);

}  // namespace ifcs

#endif  // IFCS_ISO_ENGINE_H_
