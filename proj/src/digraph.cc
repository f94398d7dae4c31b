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

#include "ifcs/digraph.h"

#include <algorithm>

namespace ifcs {
namespace {

bool InsertSorted(std::vector<VertexId>& list, VertexId v) {
  if (list.empty() || list.back() < v) {
    list.push_back(v);
    return true;
  }
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (*it == v) return false;
  list.insert(it, v);
  return true;
}

void EraseSorted(std::vector<VertexId>& list, VertexId v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it != list.end() && *it == v) list.erase(it);
}

}  // namespace

Digraph::Digraph(std::size_t id_bound)
    : present_(id_bound, false), out_(id_bound), in_(id_bound) {}

void Digraph::Grow(VertexId v) {
  if (v >= present_.size()) {
    present_.resize(v + 1, false);
    out_.resize(v + 1);
    in_.resize(v + 1);
  }
}

void Digraph::AddVertex(VertexId v) {
  Grow(v);
  if (!present_[v]) {
    present_[v] = true;
    ++num_vertices_;
  }
}

void Digraph::AddEdge(VertexId src, VertexId dst) {
  AddVertex(src);
  AddVertex(dst);
  if (src == dst) return;
  if (InsertSorted(out_[src], dst)) {
    InsertSorted(in_[dst], src);
    ++num_edges_;
  }
}

void Digraph::RemoveVertex(VertexId v) {
  if (!contains(v)) return;
  for (VertexId w : out_[v]) EraseSorted(in_[w], v);
  for (VertexId w : in_[v]) EraseSorted(out_[w], v);
  num_edges_ -= out_[v].size() + in_[v].size();
  out_[v].clear();
  in_[v].clear();
  present_[v] = false;
  --num_vertices_;
}

void Digraph::ReplaceOutEdges(VertexId v, std::span<const VertexId> targets) {
  AddVertex(v);
  for (VertexId w : out_[v]) EraseSorted(in_[w], v);
  num_edges_ -= out_[v].size();
  out_[v].clear();
  for (VertexId w : targets) {
    if (contains(w)) AddEdge(v, w);
  }
}

bool Digraph::HasEdge(VertexId src, VertexId dst) const {
  if (!contains(src)) return false;
  return std::binary_search(out_[src].begin(), out_[src].end(), dst);
}

std::vector<VertexId> Digraph::Vertices() const {
  std::vector<VertexId> out;
  out.reserve(num_vertices_);
  for (VertexId v = 0; v < present_.size(); ++v) {
    if (present_[v]) out.push_back(v);
  }
  return out;
}

std::vector<std::vector<VertexId>> WeaklyConnectedComponents(const Digraph& g) {
  std::vector<std::vector<VertexId>> components;
  std::vector<bool> seen(g.id_bound(), false);
  std::vector<VertexId> stack;
  for (VertexId root : g.Vertices()) {
    if (seen[root]) continue;
    std::vector<VertexId> members;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (auto list : {g.out_neighbors(v), g.in_neighbors(v)}) {
        for (VertexId w : list) {
          if (!seen[w]) {
            seen[w] = true;
            stack.push_back(w);
          }
        }
      }
    }
    std::sort(members.begin(), members.end());
    components.push_back(std::move(members));
  }
  return components;
}

}  // namespace ifcs
