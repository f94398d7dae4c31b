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

#include "ifcs/search.h"

#include <algorithm>
#include <chrono>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>

#include "ifcs/errors.h"
#include "parallel.h"

namespace ifcs {
namespace {

// Outcome of enumerating every instance around one target vertex.
struct Enumerated {
  ActiveLevel level = 0;
  std::vector<VertexId> m_neighbors;  // sorted, unique
};

Enumerated EnumerateAround(const Hin& g, const MotifPlan& plan, VertexId v,
                           const QueryParams& params) {
  Enumerated out;
  std::vector<VertexId> seen;
  out.level = EnumerateInstancesAround(
      g, plan, v,
      [&](std::span<const VertexId> mapping) {
        for (QueryVertexId u : plan.target_type_vertices()) {
          if (u != plan.target()) seen.push_back(mapping[u]);
        }
      },
      MatchBudget{params.embedding_budget});
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  out.m_neighbors = std::move(seen);
  return out;
}

// Keeps every community tied at the lowest exact score seen so far.
class FairestSet {
 public:
  void Offer(std::vector<VertexId> members, std::vector<ActiveLevel> levels) {
    const Fraction score = ExactFairnessScore(levels);
    if (best_ && score > *best_) return;
    if (!best_ || score < *best_) {
      best_ = score;
      kept_.clear();
    }
    Community c;
    c.members = std::move(members);
    c.levels = std::move(levels);
    c.fairness_score = FairnessScore(c.levels);
    c.exact_score = score;
    kept_.push_back(std::move(c));
  }

  const std::optional<Fraction>& best() const { return best_; }

  void MoveInto(CommunityResult& result) {
    std::sort(kept_.begin(), kept_.end(),
              [](const Community& a, const Community& b) {
                return a.members.front() < b.members.front();
              });
    result.communities = std::move(kept_);
    if (!result.communities.empty()) {
      result.fairness_score = result.communities.front().fairness_score;
    }
  }

 private:
  std::optional<Fraction> best_;
  std::vector<Community> kept_;
};

void RecordMGraph(CommunityResult& result, std::size_t id_bound,
                  const std::vector<std::optional<Enumerated>>& info) {
  result.m_graph = Digraph(id_bound);
  for (const Community& c : result.communities) {
    for (VertexId v : c.members) {
      result.m_graph.AddVertex(v);
      for (VertexId w : info[v]->m_neighbors) result.m_graph.AddEdge(v, w);
    }
  }
}

// Walks one CM-graph component, discovering its M-connected communities
// one at a time. Members are enumerated on demand; candidates that point
// into the current community are checked via their (cached) M-neighbors.
// With pruning enabled, a community whose lower bound exceeds the best
// score so far is abandoned and remembered, and any later walk that
// touches it is abandoned as well.
class ComponentWalker {
 public:
  ComponentWalker(const Hin& g, const MotifPlan& plan, const Digraph& cm,
                  const QueryParams& params, bool prune, SearchStats& stats,
                  FairestSet& fairest,
                  std::vector<std::optional<Enumerated>>& info)
      : g_(g),
        plan_(plan),
        cm_(cm),
        params_(params),
        prune_(prune),
        stats_(stats),
        fairest_(fairest),
        info_(info),
        state_(g.id_bound(), State::kOpen),
        in_walk_(g.id_bound(), false) {}

  void Walk(std::span<const VertexId> component) {
    for (VertexId seed : component) {
      if (state_[seed] == State::kOpen) WalkFrom(seed, component.size());
    }
  }

 private:
  enum class State { kOpen, kDone, kPruned };

  const Enumerated& Info(VertexId v) {
    if (!info_[v]) {
      info_[v] = EnumerateAround(g_, plan_, v, params_);
      ++stats_.visited_targets;
      stats_.instances_enumerated += info_[v]->level;
    }
    return *info_[v];
  }

  bool PointsInto(VertexId u) {
    for (VertexId w : Info(u).m_neighbors) {
      if (in_walk_[w]) return true;
    }
    return false;
  }

  void WalkFrom(VertexId seed, std::size_t candidate_size) {
    std::vector<VertexId> visited;
    std::vector<ActiveLevel> levels;
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>>
        unvisited;
    std::vector<VertexId> in_candidates;
    bool abandoned = false;

    unvisited.push(seed);
    while (!abandoned) {
      while (!unvisited.empty() && !abandoned) {
        const VertexId v = unvisited.top();
        unvisited.pop();
        if (in_walk_[v]) continue;
        if (state_[v] == State::kPruned) {
          abandoned = true;
          break;
        }
        const Enumerated& e = Info(v);
        in_walk_[v] = true;
        visited.push_back(v);
        levels.push_back(e.level);
        for (VertexId w : e.m_neighbors) {
          if (state_[w] == State::kPruned) {
            abandoned = true;
          } else if (!in_walk_[w]) {
            unvisited.push(w);
          }
        }
        for (VertexId u : cm_.in_neighbors(v)) {
          if (!in_walk_[u]) in_candidates.push_back(u);
        }
        if (!abandoned && prune_ && fairest_.best()) {
          ++stats_.bound_computations;
          const Fraction bound =
              ExactLowerBound(PartialObservation{levels, candidate_size});
          if (bound > *fairest_.best()) {
            ++stats_.components_pruned;
            abandoned = true;
          }
        }
      }
      if (abandoned) break;

      // Out-edges are exhausted; look for candidates linking in.
      std::sort(in_candidates.begin(), in_candidates.end());
      in_candidates.erase(
          std::unique(in_candidates.begin(), in_candidates.end()),
          in_candidates.end());
      std::vector<VertexId> pending;
      pending.swap(in_candidates);
      for (VertexId u : pending) {
        if (!in_walk_[u] && PointsInto(u)) unvisited.push(u);
      }
      if (unvisited.empty()) break;
    }

    for (VertexId v : visited) {
      in_walk_[v] = false;
      state_[v] = abandoned ? State::kPruned : State::kDone;
    }
    if (abandoned) {
      // Queued vertices are M-neighbors of the walk, hence in its component.
      for (; !unvisited.empty(); unvisited.pop()) {
        state_[unvisited.top()] = State::kPruned;
      }
      return;
    }
    if (visited.size() < params_.k) return;

    std::vector<std::size_t> order(visited.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return visited[a] < visited[b];
    });
    std::vector<VertexId> members;
    std::vector<ActiveLevel> member_levels;
    for (std::size_t i : order) {
      members.push_back(visited[i]);
      member_levels.push_back(levels[i]);
    }
    fairest_.Offer(std::move(members), std::move(member_levels));
  }

  const Hin& g_;
  const MotifPlan& plan_;
  const Digraph& cm_;
  const QueryParams& params_;
  bool prune_;
  SearchStats& stats_;
  FairestSet& fairest_;
  std::vector<std::optional<Enumerated>>& info_;
  std::vector<State> state_;
  std::vector<bool> in_walk_;
};

void CheckParams(const QueryParams& params) {
  if (params.k == 0) throw InputError("k must be at least 1");
}

}  // namespace

std::string_view ModeName(SearchMode mode) {
  switch (mode) {
    case SearchMode::kBaseline:
      return "baseline";
    case SearchMode::kFva:
      return "fva";
    case SearchMode::kFvaM:
      return "fva-m";
    case SearchMode::kFvaL:
      return "fva-l";
  }
  return "unknown";
}

SearchMode ParseMode(std::string_view name) {
  for (SearchMode m : {SearchMode::kBaseline, SearchMode::kFva,
                       SearchMode::kFvaM, SearchMode::kFvaL}) {
    if (ModeName(m) == name) return m;
  }
  throw InputError("unknown mode '" + std::string(name) +
                   "' (expected baseline, fva, fva-m or fva-l)");
}

std::optional<CandidateRegion> ExploreRegion(const Hin& g,
                                             const MotifPlan& plan,
                                             VertexId anchor) {
  if (!NlfPass(g, plan, plan.target(), anchor)) return std::nullopt;
  const auto& order = plan.bfs().order;
  CandidateSets cand(plan.size());
  cand[plan.target()] = {anchor};

  // Forward: grow each query vertex's candidates from its BFS parent's,
  // keeping those that see a candidate of every earlier neighbor.
  for (std::size_t pos = 1; pos < order.size(); ++pos) {
    const QueryVertexId u = order[pos];
    const PlanNeighbor& parent = plan.parent(u);
    std::vector<VertexId> found;
    for (VertexId v : cand[parent.vertex]) {
      const auto pool =
          (parent.dirs & kIn) ? g.out_neighbors(v) : g.in_neighbors(v);
      for (VertexId w : pool) {
        if (g.label(w) != plan.label(u)) continue;
        if (NlfPass(g, plan, u, w) && StarCheckForward(g, plan, u, w, cand)) {
          found.push_back(w);
        }
      }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    if (found.empty()) return std::nullopt;
    cand[u] = std::move(found);
  }

  // Backward: in reverse order, drop candidates that miss a candidate of
  // some later neighbor.
  for (std::size_t pos = order.size() - 1; pos-- > 0;) {
    const QueryVertexId u = order[pos];
    auto& list = cand[u];
    std::erase_if(list, [&](VertexId v) {
      return !StarCheckBackward(g, plan, u, v, cand);
    });
    if (list.empty()) return std::nullopt;
  }

  CandidateRegion region;
  for (const QueryEdge& e : plan.motif().edges()) {
    const auto& targets = cand[e.dst];
    for (VertexId x : cand[e.src]) {
      for (VertexId y : g.out_neighbors(x)) {
        if (std::binary_search(targets.begin(), targets.end(), y)) {
          region.edges.push_back({x, y});
        }
      }
    }
  }
  std::sort(region.edges.begin(), region.edges.end());
  region.edges.erase(std::unique(region.edges.begin(), region.edges.end()),
                     region.edges.end());
  region.candidates = std::move(cand);
  return region;
}

ExplorationResult ExplorationFilter(const Hin& g, const MotifPlan& plan,
                                    const QueryParams& params,
                                    SearchStats* stats) {
  CheckParams(params);
  SearchStats local;
  SearchStats& st = stats ? *stats : local;

  std::vector<VertexId> targets;
  if (plan.satisfiable()) {
    const auto all = g.VerticesOfType(plan.target_label());
    targets.assign(all.begin(), all.end());
  }
  std::vector<VertexId> passing;
  std::vector<VertexId> failing;
  for (VertexId v : targets) {
    (NlfPass(g, plan, plan.target(), v) ? passing : failing).push_back(v);
  }
  st.survivors_after_nlf = passing.size();

  Hin base = g;
  base.DeleteVertices(failing);

  std::vector<std::optional<CandidateRegion>> regions(passing.size());
  ParallelFor(passing.size(), params.threads, [&](std::size_t i) {
    regions[i] = ExploreRegion(base, plan, passing[i]);
  });

  ExplorationResult out;
  out.cm_graph = Digraph(g.id_bound());
  std::vector<bool> has_region(g.id_bound(), false);
  for (std::size_t i = 0; i < passing.size(); ++i) {
    if (regions[i]) has_region[passing[i]] = true;
  }
  for (std::size_t i = 0; i < passing.size(); ++i) {
    if (!regions[i]) continue;
    const VertexId c = passing[i];
    out.cm_graph.AddVertex(c);
    std::vector<VertexId> linked;
    for (QueryVertexId u : plan.target_type_vertices()) {
      for (VertexId x : regions[i]->candidates[u]) {
        if (x != c && has_region[x]) linked.push_back(x);
      }
    }
    std::sort(linked.begin(), linked.end());
    linked.erase(std::unique(linked.begin(), linked.end()), linked.end());
    for (VertexId x : linked) out.cm_graph.AddEdge(c, x);
  }

  for (const auto& comp : WeaklyConnectedComponents(out.cm_graph)) {
    if (comp.size() >= params.k) continue;
    for (VertexId v : comp) {
      out.cm_graph.RemoveVertex(v);
      out.dropped_small.push_back(v);
    }
  }
  std::sort(out.dropped_small.begin(), out.dropped_small.end());
  st.survivors_after_exploration = out.cm_graph.num_vertices();

  std::vector<Edge> kept_edges;
  for (std::size_t i = 0; i < passing.size(); ++i) {
    if (!regions[i] || !out.cm_graph.contains(passing[i])) continue;
    kept_edges.insert(kept_edges.end(), regions[i]->edges.begin(),
                      regions[i]->edges.end());
  }
  std::sort(kept_edges.begin(), kept_edges.end());
  kept_edges.erase(std::unique(kept_edges.begin(), kept_edges.end()),
                   kept_edges.end());
  out.reduced = base.InducedByEdges(kept_edges);
  std::vector<VertexId> stray;
  if (plan.satisfiable()) {
    for (VertexId v : out.reduced.VerticesOfType(plan.target_label())) {
      if (!out.cm_graph.contains(v)) stray.push_back(v);
    }
  }
  out.reduced.DeleteVertices(stray);
  return out;
}

std::vector<VertexId> DeletionFixpoint(Hin& g, const MotifPlan& plan,
                                       std::span<const VertexId> targets,
                                       const QueryParams& params,
                                       SearchStats* stats, Digraph* cm) {
  std::vector<VertexId> alive;
  for (VertexId v : targets) {
    if (g.contains(v)) alive.push_back(v);
  }
  std::sort(alive.begin(), alive.end());
  const MatchBudget budget{params.embedding_budget};
  while (true) {
    std::vector<char> ok(alive.size());
    ParallelFor(alive.size(), params.threads, [&](std::size_t i) {
      ok[i] = ExistsInstanceAround(g, plan, alive[i], budget);
    });
    if (stats) stats->existence_checks += alive.size();
    std::vector<VertexId> failed;
    std::vector<VertexId> kept;
    for (std::size_t i = 0; i < alive.size(); ++i) {
      (ok[i] ? kept : failed).push_back(alive[i]);
    }
    if (failed.empty()) break;
    g.DeleteVertices(failed);
    if (cm) {
      for (VertexId v : failed) cm->RemoveVertex(v);
    }
    alive = std::move(kept);
  }
  return alive;
}

std::vector<VertexId> MessagePassing(Hin& g, const MotifPlan& plan, Digraph& cm,
                                     const QueryParams& params,
                                     SearchStats* stats, RoundTrace* trace) {
  const MatchBudget budget{params.embedding_budget};
  std::vector<VertexId> worklist = cm.Vertices();
  while (!worklist.empty()) {
    if (trace) trace->push_back(worklist);
    std::vector<char> ok(worklist.size());
    ParallelFor(worklist.size(), params.threads, [&](std::size_t i) {
      ok[i] = ExistsInstanceAround(g, plan, worklist[i], budget);
    });
    if (stats) stats->existence_checks += worklist.size();

    std::vector<VertexId> failed;
    for (std::size_t i = 0; i < worklist.size(); ++i) {
      if (!ok[i]) failed.push_back(worklist[i]);
    }
    std::vector<VertexId> notify;
    for (VertexId v : failed) {
      for (VertexId u : cm.in_neighbors(v)) notify.push_back(u);
    }
    g.DeleteVertices(failed);
    for (VertexId v : failed) cm.RemoveVertex(v);

    std::sort(notify.begin(), notify.end());
    notify.erase(std::unique(notify.begin(), notify.end()), notify.end());
    std::erase_if(notify, [&](VertexId u) { return !cm.contains(u); });
    worklist = std::move(notify);
  }
  return cm.Vertices();
}

CommunityResult BaselineSearch(const Hin& g, const Motif& m,
                               const QueryParams& params) {
  CheckParams(params);
  CommunityResult result;
  SearchStats& st = result.stats;
  const MotifPlan plan(m, g.labels());

  Hin work = g;
  std::vector<VertexId> targets;
  if (plan.satisfiable()) {
    const auto all = work.VerticesOfType(plan.target_label());
    targets.assign(all.begin(), all.end());
  }
  st.survivors_after_nlf = targets.size();
  st.survivors_after_exploration = targets.size();
  const std::vector<VertexId> survivors =
      DeletionFixpoint(work, plan, targets, params, &st);
  st.survivors_after_message_passing = survivors.size();

  std::vector<Enumerated> found(survivors.size());
  ParallelFor(survivors.size(), params.threads, [&](std::size_t i) {
    found[i] = EnumerateAround(work, plan, survivors[i], params);
  });

  std::vector<std::optional<Enumerated>> info(g.id_bound());
  Digraph m_graph(g.id_bound());
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    st.visited_targets += 1;
    st.instances_enumerated += found[i].level;
    m_graph.AddVertex(survivors[i]);
    for (VertexId w : found[i].m_neighbors) m_graph.AddEdge(survivors[i], w);
    info[survivors[i]] = std::move(found[i]);
  }

  FairestSet fairest;
  for (auto& comp : WeaklyConnectedComponents(m_graph)) {
    if (comp.size() < params.k) continue;
    std::vector<ActiveLevel> levels;
    for (VertexId v : comp) levels.push_back(info[v]->level);
    fairest.Offer(std::move(comp), std::move(levels));
  }
  fairest.MoveInto(result);
  RecordMGraph(result, g.id_bound(), info);
  return result;
}

CommunityResult OptimizedSearch(const Hin& g, const Motif& m,
                                const QueryParams& params, SearchMode mode) {
  if (mode == SearchMode::kBaseline) {
    throw std::invalid_argument("OptimizedSearch does not run the baseline");
  }
  CheckParams(params);
  CommunityResult result;
  SearchStats& st = result.stats;
  const MotifPlan plan(m, g.labels());

  ExplorationResult ex = ExplorationFilter(g, plan, params, &st);
  Hin& work = ex.reduced;
  Digraph& cm = ex.cm_graph;
  if (mode == SearchMode::kFva) {
    const std::vector<VertexId> candidates = cm.Vertices();
    DeletionFixpoint(work, plan, candidates, params, &st, &cm);
  } else {
    MessagePassing(work, plan, cm, params, &st);
  }
  st.survivors_after_message_passing = cm.num_vertices();

  std::vector<std::vector<VertexId>> components = WeaklyConnectedComponents(cm);
  std::stable_sort(
      components.begin(), components.end(),
      [](const auto& a, const auto& b) { return a.size() < b.size(); });

  std::vector<std::optional<Enumerated>> info(g.id_bound());
  FairestSet fairest;
  ComponentWalker walker(work, plan, cm, params, mode == SearchMode::kFvaL, st,
                         fairest, info);
  for (const auto& comp : components) walker.Walk(comp);
  fairest.MoveInto(result);
  RecordMGraph(result, g.id_bound(), info);
  return result;
}

CommunityResult RunQuery(const Hin& g, const Motif& m,
                         const QueryParams& params, SearchMode mode) {
  const auto start = std::chrono::steady_clock::now();
  CommunityResult result = mode == SearchMode::kBaseline
                               ? BaselineSearch(g, m, params)
                               : OptimizedSearch(g, m, params, mode);
  result.stats.wall_time_ms = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
  return result;
}

}  // namespace ifcs
