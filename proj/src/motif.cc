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

#include "ifcs/motif.h"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <unordered_map>

#include "ifcs/errors.h"
#include "tsv.h"

namespace ifcs {

Motif::Motif(std::vector<std::string> labels, std::vector<QueryEdge> edges,
             QueryVertexId target, MotifLimits limits,
             std::vector<std::string> names)
    : labels_(std::move(labels)),
      names_(std::move(names)),
      edges_(std::move(edges)),
      target_(target) {
  const std::size_t n = labels_.size();
  if (n < limits.min_vertices || n > limits.max_vertices) {
    throw ValidationError("motif has " + std::to_string(n) +
                          " vertices; allowed range is [" +
                          std::to_string(limits.min_vertices) + ", " +
                          std::to_string(limits.max_vertices) + "]");
  }
  if (names_.empty()) {
    for (std::size_t u = 0; u < n; ++u) names_.push_back(std::to_string(u));
  }
  if (names_.size() != n) throw ValidationError("motif name count mismatch");
  for (const auto& l : labels_) {
    if (l.empty()) throw ValidationError("motif vertex with empty label");
  }
  if (target_ >= n) throw ValidationError("motif target is not a vertex");

  neighbors_.resize(n);
  for (const QueryEdge& e : edges_) {
    if (e.src >= n || e.dst >= n) {
      throw ValidationError("motif edge references an unknown vertex");
    }
    if (e.src == e.dst) throw ValidationError("motif edge is a self-loop");
    neighbors_[e.src].push_back(e.dst);
    neighbors_[e.dst].push_back(e.src);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw ValidationError("motif has a duplicate edge");
  }
  for (auto& list : neighbors_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  std::vector<bool> seen(n, false);
  std::vector<QueryVertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const QueryVertexId u = stack.back();
    stack.pop_back();
    ++reached;
    for (QueryVertexId w : neighbors_[u]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) throw ValidationError("motif is not connected");

  if (TargetTypeVertices().size() < 2) {
    warnings_.push_back(
        "motif has fewer than two vertices of the target type '" +
        labels_[target_] + "'; every community will be a single vertex");
  }
}

bool Motif::HasEdge(QueryVertexId src, QueryVertexId dst) const {
  return std::binary_search(edges_.begin(), edges_.end(), QueryEdge{src, dst});
}

std::vector<QueryVertexId> Motif::TargetTypeVertices() const {
  std::vector<QueryVertexId> out;
  for (QueryVertexId u = 0; u < labels_.size(); ++u) {
    if (labels_[u] == labels_[target_]) out.push_back(u);
  }
  return out;
}

BfsOrder ComputeBfsOrder(const Motif& m) {
  BfsOrder bfs;
  bfs.index.assign(m.size(), m.size());
  std::deque<QueryVertexId> queue{m.target()};
  bfs.index[m.target()] = 0;
  bfs.order.push_back(m.target());
  while (!queue.empty()) {
    const QueryVertexId u = queue.front();
    queue.pop_front();
    for (QueryVertexId w : m.neighbors(u)) {
      if (bfs.index[w] == m.size()) {
        bfs.index[w] = bfs.order.size();
        bfs.order.push_back(w);
        queue.push_back(w);
      }
    }
  }
  return bfs;
}

const std::string& TargetType(const Motif& m) { return m.label(m.target()); }

Motif ParseMotif(std::istream& in, MotifLimits limits) {
  std::vector<std::string> labels;
  std::vector<std::string> names;
  std::unordered_map<std::string, QueryVertexId> ids;
  std::vector<QueryEdge> edges;
  std::optional<QueryVertexId> target;

  auto lookup = [&](std::size_t line, std::string_view name) {
    auto it = ids.find(std::string(name));
    if (it == ids.end()) {
      throw ParseError(line,
                       "unknown motif vertex '" + std::string(name) + "'");
    }
    return it->second;
  };

  ForEachTsvRow(
      in, [&](std::size_t line, const std::vector<std::string_view>& f) {
        if (f[0] == "v") {
          if (f.size() != 3 || f[1].empty() || f[2].empty()) {
            throw ParseError(line, "expected 'v<TAB>id<TAB>label'");
          }
          const auto id = static_cast<QueryVertexId>(labels.size());
          if (!ids.emplace(std::string(f[1]), id).second) {
            throw ParseError(
                line, "duplicate motif vertex '" + std::string(f[1]) + "'");
          }
          names.emplace_back(f[1]);
          labels.emplace_back(f[2]);
        } else if (f[0] == "e") {
          if (f.size() != 3)
            throw ParseError(line, "expected 'e<TAB>src<TAB>dst'");
          edges.push_back({lookup(line, f[1]), lookup(line, f[2])});
        } else if (f[0] == "target") {
          if (f.size() != 2) throw ParseError(line, "expected 'target<TAB>id'");
          if (target) throw ParseError(line, "duplicate target line");
          target = lookup(line, f[1]);
        } else {
          throw ParseError(line,
                           "unknown motif record '" + std::string(f[0]) + "'");
        }
      });
  if (!target) throw ValidationError("motif has no target line");
  return Motif(std::move(labels), std::move(edges), *target, limits,
               std::move(names));
}

Motif LoadMotifFile(const std::string& path, MotifLimits limits) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open motif file " + path);
  return ParseMotif(in, limits);
}

void WriteMotif(const Motif& m, std::ostream& out) {
  for (QueryVertexId u = 0; u < m.size(); ++u) {
    out << "v\t" << m.name(u) << '\t' << m.label(u) << '\n';
  }
  for (const QueryEdge& e : m.edges()) {
    out << "e\t" << m.name(e.src) << '\t' << m.name(e.dst) << '\n';
  }
  out << "target\t" << m.name(m.target()) << '\n';
}

}  // namespace ifcs
