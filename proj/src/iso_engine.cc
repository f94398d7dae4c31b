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

#include "ifcs/iso_engine.h"

#include <algorithm>
#include <string>

#include "ifcs/errors.h"

namespace ifcs {
namespace {

// Enumerates target-fixing automorphisms of a motif by backtracking in BFS
// order (each vertex's image must be adjacent to its parent's image).
class AutomorphismSearch {
 public:
  AutomorphismSearch(const Motif& m, const BfsOrder& bfs)
      : m_(m), bfs_(bfs), image_(m.size()), used_(m.size(), false) {}

  std::vector<std::vector<QueryVertexId>> Run() {
    image_[m_.target()] = m_.target();
    used_[m_.target()] = true;
    Extend(1);
    return std::move(found_);
  }

 private:
  bool Consistent(QueryVertexId u, QueryVertexId x) const {
    if (m_.label(u) != m_.label(x)) return false;
    if (m_.neighbors(u).size() != m_.neighbors(x).size()) return false;
    for (std::size_t i = 0; i < bfs_.index[u]; ++i) {
      const QueryVertexId w = bfs_.order[i];
      if (m_.HasEdge(u, w) != m_.HasEdge(x, image_[w])) return false;
      if (m_.HasEdge(w, u) != m_.HasEdge(image_[w], x)) return false;
    }
    return true;
  }

  void Extend(std::size_t pos) {
    if (pos == bfs_.order.size()) {
      bool identity = true;
      for (QueryVertexId u = 0; u < image_.size(); ++u) {
        identity = identity && image_[u] == u;
      }
      if (!identity) found_.push_back(image_);
      return;
    }
    const QueryVertexId u = bfs_.order[pos];
    for (QueryVertexId x = 0; x < m_.size(); ++x) {
      if (used_[x] || !Consistent(u, x)) continue;
      used_[x] = true;
      image_[u] = x;
      Extend(pos + 1);
      used_[x] = false;
    }
  }

  const Motif& m_;
  const BfsOrder& bfs_;
  std::vector<QueryVertexId> image_;
  std::vector<bool> used_;
  std::vector<std::vector<QueryVertexId>> found_;
};

// Anchored backtracking over the BFS order. Each query vertex draws its
// candidates from the adjacency of its parent's image, then checks label,
// NLF, injectivity and the edges to every other earlier neighbor.
class AnchoredMatcher {
 public:
  AnchoredMatcher(const Hin& g, const MotifPlan& plan, MatchBudget budget,
                  bool stop_at_first, const InstanceVisitor* visitor)
      : g_(g),
        plan_(plan),
        budget_(budget),
        stop_at_first_(stop_at_first),
        visitor_(visitor),
        mapping_(plan.size()) {}

  std::uint64_t Run(VertexId anchor) {
    if (!plan_.satisfiable() || !g_.contains(anchor) ||
        g_.label(anchor) != plan_.target_label() ||
        !NlfPass(g_, plan_, plan_.target(), anchor)) {
      return 0;
    }
    anchor_ = anchor;
    mapping_[plan_.target()] = anchor;
    Extend(1);
    return found_;
  }

 private:
  bool Used(VertexId w, std::size_t pos) const {
    const auto& order = plan_.bfs().order;
    for (std::size_t i = 0; i < pos; ++i) {
      if (mapping_[order[i]] == w) return true;
    }
    return false;
  }

  bool IsCanonical() const {
    for (const auto& perm : plan_.automorphisms()) {
      for (QueryVertexId u = 0; u < perm.size(); ++u) {
        const VertexId mine = mapping_[u];
        const VertexId theirs = mapping_[perm[u]];
        if (theirs < mine) return false;
        if (mine < theirs) break;
      }
    }
    return true;
  }

  void Extend(std::size_t pos) {
    if (done_) return;
    if (budget_.max_states != 0 && ++states_ > budget_.max_states) {
      throw BudgetExceeded("embedding budget of " +
                           std::to_string(budget_.max_states) +
                           " search states exceeded around vertex '" +
                           g_.external_id(anchor_) + "'");
    }
    const auto& order = plan_.bfs().order;
    if (pos == order.size()) {
      if (stop_at_first_) {
        found_ = 1;
        done_ = true;
        return;
      }
      if (!IsCanonical()) return;
      ++found_;
      if (visitor_ != nullptr && *visitor_) (*visitor_)(mapping_);
      return;
    }
    const QueryVertexId u = order[pos];
    const PlanNeighbor& parent = plan_.parent(u);
    // parent.dirs is seen from u; kIn means parent -> u.
    const VertexId from = mapping_[parent.vertex];
    const auto pool =
        (parent.dirs & kIn) ? g_.out_neighbors(from) : g_.in_neighbors(from);
    const LabelId want = plan_.label(u);
    for (VertexId w : pool) {
      if (g_.label(w) != want || Used(w, pos)) continue;
      bool ok = true;
      for (const PlanNeighbor& e : plan_.earlier(u)) {
        if (!PairMatches(g_, w, mapping_[e.vertex], e.dirs)) {
          ok = false;
          break;
        }
      }
      if (!ok || !NlfPass(g_, plan_, u, w)) continue;
      mapping_[u] = w;
      Extend(pos + 1);
      if (done_) return;
    }
  }

  const Hin& g_;
  const MotifPlan& plan_;
  MatchBudget budget_;
  bool stop_at_first_;
  const InstanceVisitor* visitor_;
  std::vector<VertexId> mapping_;
  VertexId anchor_ = 0;
  std::uint64_t states_ = 0;
  std::uint64_t found_ = 0;
  bool done_ = false;
};

bool HasCandidateNeighbor(const Hin& g, VertexId v, const PlanNeighbor& nb,
                          LabelId label, const std::vector<VertexId>& cand) {
  const auto pool = (nb.dirs & kOut) ? g.out_neighbors(v) : g.in_neighbors(v);
  for (VertexId w : pool) {
    if (g.label(w) != label) continue;
    if ((nb.dirs & kOut) && (nb.dirs & kIn) && !g.HasEdge(w, v)) continue;
    if (std::binary_search(cand.begin(), cand.end(), w)) return true;
  }
  return false;
}

}  // namespace

MotifPlan::MotifPlan(const Motif& motif, const LabelDictionary& labels)
    : motif_(motif), bfs_(ComputeBfsOrder(motif)) {
  const std::size_t n = motif_.size();
  labels_.resize(n);
  for (QueryVertexId u = 0; u < n; ++u) {
    labels_[u] = labels.Find(motif_.label(u));
    if (labels_[u] == kNoLabel) satisfiable_ = false;
  }

  neighbors_.resize(n);
  earlier_.resize(n);
  later_.resize(n);
  signatures_.resize(n);
  for (QueryVertexId u = 0; u < n; ++u) {
    for (QueryVertexId w : motif_.neighbors(u)) {
      std::uint8_t dirs = 0;
      if (motif_.HasEdge(u, w)) dirs |= kOut;
      if (motif_.HasEdge(w, u)) dirs |= kIn;
      neighbors_[u].push_back({w, dirs});
      (bfs_.index[w] < bfs_.index[u] ? earlier_[u] : later_[u])
          .push_back({w, dirs});
    }
    auto by_position = [&](const PlanNeighbor& a, const PlanNeighbor& b) {
      return bfs_.index[a.vertex] < bfs_.index[b.vertex];
    };
    std::sort(earlier_[u].begin(), earlier_[u].end(), by_position);
    std::sort(later_[u].begin(), later_[u].end(), by_position);

    // Unknown labels never match a data vertex, so an unsatisfiable plan
    // needs no signature.
    if (!satisfiable_) continue;
    auto& sig = signatures_[u];
    for (const PlanNeighbor& nb : neighbors_[u]) {
      const LabelId l = labels_[nb.vertex];
      auto it = std::find_if(sig.begin(), sig.end(),
                             [l](const NlfEntry& e) { return e.label == l; });
      if (it == sig.end()) {
        sig.push_back({l, 0, 0});
        it = sig.end() - 1;
      }
      if (nb.dirs & kIn) ++it->in_count;
      if (nb.dirs & kOut) ++it->out_count;
    }
    std::sort(sig.begin(), sig.end(), [](const NlfEntry& a, const NlfEntry& b) {
      return a.label < b.label;
    });
  }
  target_type_vertices_ = motif_.TargetTypeVertices();
  automorphisms_ = AutomorphismSearch(motif_, bfs_).Run();
}

bool PairMatches(const Hin& g, VertexId v, VertexId w, std::uint8_t dirs) {
  if ((dirs & kOut) && !g.HasEdge(v, w)) return false;
  if ((dirs & kIn) && !g.HasEdge(w, v)) return false;
  return true;
}

bool NlfPass(const Hin& g, const MotifPlan& plan, QueryVertexId u, VertexId v) {
  if (!plan.satisfiable() || !g.contains(v) || g.label(v) != plan.label(u)) {
    return false;
  }
  for (const NlfEntry& need : plan.signature(u)) {
    const NlfEntry have = g.NlfCounts(v, need.label);
    if (have.in_count < need.in_count || have.out_count < need.out_count) {
      return false;
    }
  }
  return true;
}

bool StarCheckForward(const Hin& g, const MotifPlan& plan, QueryVertexId u,
                      VertexId v, const CandidateSets& cand) {
  for (const PlanNeighbor& nb : plan.earlier(u)) {
    if (!HasCandidateNeighbor(g, v, nb, plan.label(nb.vertex),
                              cand[nb.vertex])) {
      return false;
    }
  }
  return true;
}

bool StarCheckBackward(const Hin& g, const MotifPlan& plan, QueryVertexId u,
                       VertexId v, const CandidateSets& cand) {
  for (const PlanNeighbor& nb : plan.later(u)) {
    if (!HasCandidateNeighbor(g, v, nb, plan.label(nb.vertex),
                              cand[nb.vertex])) {
      return false;
    }
  }
  return true;
}

bool ExistsInstanceAround(const Hin& g, const MotifPlan& plan, VertexId anchor,
                          MatchBudget budget) {
  return AnchoredMatcher(g, plan, budget, true, nullptr).Run(anchor) > 0;
}

std::uint64_t EnumerateInstancesAround(const Hin& g, const MotifPlan& plan,
                                       VertexId anchor,
                                       const InstanceVisitor& visitor,
                                       MatchBudget budget) {
  return AnchoredMatcher(g, plan, budget, false, &visitor).Run(anchor);
}

std::vector<VertexId> TargetTypeMembers(const MotifPlan& plan,
                                        std::span<const VertexId> mapping) {
  std::vector<VertexId> out;
  for (QueryVertexId u : plan.target_type_vertices()) {
    if (u != plan.target()) out.push_back(mapping[u]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ifcs
