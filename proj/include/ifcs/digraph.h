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

#ifndef IFCS_DIGRAPH_H_
#define IFCS_DIGRAPH_H_

#include <cstddef>
#include <span>
#include <vector>

#include "ifcs/hin.h"

namespace ifcs {

// Directed homogeneous graph over a subset of a Hin's vertex ids. Used for
// the M-graph (confirmed M-neighbor links) and the CM-graph (candidate
// links). Neighbor lists are sorted ascending; self-loops are dropped.
class Digraph {
 public:
  explicit Digraph(std::size_t id_bound = 0);

  void AddVertex(VertexId v);
  // Adds both endpoints if absent. Duplicate edges are ignored.
  void AddEdge(VertexId src, VertexId dst);
  // Removes `v` and its incident edges; no-op if absent.
  void RemoveVertex(VertexId v);
  // Replaces the out-edges of `v` with edges to `targets` (present ones).
  void ReplaceOutEdges(VertexId v, std::span<const VertexId> targets);

  bool contains(VertexId v) const { return v < present_.size() && present_[v]; }
  std::span<const VertexId> out_neighbors(VertexId v) const { return out_[v]; }
  std::span<const VertexId> in_neighbors(VertexId v) const { return in_[v]; }
  bool HasEdge(VertexId src, VertexId dst) const;

  std::size_t id_bound() const { return present_.size(); }
  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return num_edges_; }
  std::vector<VertexId> Vertices() const;

 private:
  void Grow(VertexId v);

  std::vector<bool> present_;
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
  std::size_t num_vertices_ = 0;
  std::size_t num_edges_ = 0;
};

// Partition of the vertices by weak connectivity. Each component is sorted
// ascending and components are ordered by their smallest member.
std::vector<std::vector<VertexId>> WeaklyConnectedComponents(const Digraph& g);

}  // namespace ifcs

#endif  // IFCS_DIGRAPH_H_
