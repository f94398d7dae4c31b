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

#ifndef IFCS_MOTIF_H_
#define IFCS_MOTIF_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ifcs {

// Motif vertices are numbered 0..size()-1, independent of data-graph ids.
using QueryVertexId = std::uint32_t;

struct QueryEdge {
  QueryVertexId src;
  QueryVertexId dst;
  auto operator<=>(const QueryEdge&) const = default;
};

struct MotifLimits {
  std::size_t min_vertices = 3;
  std::size_t max_vertices = 12;
};

// A target-aware motif: a small connected typed digraph with one designated
// target vertex whose type defines community membership.
class Motif {
 public:
  // Validates and throws ValidationError on: size outside `limits`, empty
  // labels, self-loops, duplicate edges, out-of-range endpoints, a target
  // outside the vertex set, or a disconnected underlying graph.
  // `names` are the ids used in files; defaults to "0", "1", ...
  Motif(std::vector<std::string> labels, std::vector<QueryEdge> edges,
        QueryVertexId target, MotifLimits limits = {},
        std::vector<std::string> names = {});

  std::size_t size() const { return labels_.size(); }
  const std::string& label(QueryVertexId u) const { return labels_.at(u); }
  const std::string& name(QueryVertexId u) const { return names_.at(u); }
  QueryVertexId target() const { return target_; }
  // Sorted.
  std::span<const QueryEdge> edges() const { return edges_; }
  bool HasEdge(QueryVertexId src, QueryVertexId dst) const;
  // Neighbors in either direction, ascending.
  std::span<const QueryVertexId> neighbors(QueryVertexId u) const {
    return neighbors_.at(u);
  }

  // Query vertices that share the target's type (the target included).
  std::vector<QueryVertexId> TargetTypeVertices() const;

  // Non-fatal findings from validation, e.g. fewer than two target-type
  // vertices (no vertex can then gain M-neighbors).
  std::span<const std::string> warnings() const { return warnings_; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::string> names_;
  std::vector<QueryEdge> edges_;
  std::vector<std::vector<QueryVertexId>> neighbors_;
  QueryVertexId target_;
  std::vector<std::string> warnings_;
};

// Breadth-first order from the target; neighbors (either direction) are
// visited in ascending id order. order[0] is the target and every later
// vertex has a neighbor earlier in the order.
struct BfsOrder {
  std::vector<QueryVertexId> order;
  std::vector<std::size_t> index;  // index[u] = position of u in order
};

BfsOrder ComputeBfsOrder(const Motif& m);

const std::string& TargetType(const Motif& m);

// Motif TSV: `v<TAB>id<TAB>label`, `e<TAB>src<TAB>dst`, `target<TAB>id`.
Motif ParseMotif(std::istream& in, MotifLimits limits = {});
Motif LoadMotifFile(const std::string& path, MotifLimits limits = {});
void WriteMotif(const Motif& m, std::ostream& out);

}  // namespace ifcs

#endif  // IFCS_MOTIF_H_
