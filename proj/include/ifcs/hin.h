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

#ifndef IFCS_HIN_H_
#define IFCS_HIN_H_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ifcs {

using VertexId = std::uint32_t;
using LabelId = std::uint32_t;

inline constexpr LabelId kNoLabel = std::numeric_limits<LabelId>::max();

struct Edge {
  VertexId src;
  VertexId dst;
  auto operator<=>(const Edge&) const = default;
};

// Interns type labels ("author", "paper", ...) to dense integer codes.
class LabelDictionary {
 public:
  LabelId Intern(std::string_view name);
  // kNoLabel when `name` was never interned.
  LabelId Find(std::string_view name) const;
  const std::string& Name(LabelId id) const { return names_.at(id); }
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, LabelId> codes_;
};

// Per-label neighbor counts of one vertex.
struct NlfEntry {
  LabelId label;
  std::uint32_t in_count;
  std::uint32_t out_count;
};

// A heterogeneous information network: a simple directed graph whose
// vertices each carry one type label.
//
// Vertex ids are dense and assigned in insertion order. Deleting a vertex
// retires its id; ids are never reused, so every id handed out stays valid
// for `label()` and `external_id()` queries after deletion. Adjacency lists
// are kept sorted ascending, as are the per-type vertex lists.
class Hin {
 public:
  Hin() = default;

  // Adds a vertex. `external_id` defaults to the decimal dense id.
  VertexId AddVertex(std::string_view label, std::string external_id = {});

  // Returns false if the edge already exists. Throws ValidationError on a
  // self-loop and ReferenceError if an endpoint is unknown or deleted.
  bool AddEdge(VertexId src, VertexId dst);

  // Bulk insertion; returns the number of edges that were duplicates (of
  // each other or of existing edges) and therefore skipped.
  std::size_t AddEdges(std::vector<Edge> edges);

  // Removes the vertices and every incident edge. Throws ReferenceError on
  // unknown or already-deleted ids.
  void DeleteVertices(std::span<const VertexId> victims);

  // Graph over the same id space holding exactly `edges` and their
  // endpoints. Throws ReferenceError if an edge is not in this graph.
  Hin InducedByEdges(std::span<const Edge> edges) const;

  // Graph keeping exactly `keep` (alive ids) and the edges among them.
  Hin InducedByVertices(std::span<const VertexId> keep) const;

  std::size_t id_bound() const { return labels_of_.size(); }
  std::size_t num_vertices() const { return num_alive_; }
  std::size_t num_edges() const { return num_edges_; }

  bool contains(VertexId v) const { return v < alive_.size() && alive_[v]; }
  LabelId label(VertexId v) const { return labels_of_.at(v); }
  const LabelDictionary& labels() const { return dict_; }
  const std::string& external_id(VertexId v) const { return external_.at(v); }
  std::optional<VertexId> FindExternal(std::string_view external_id) const;

  std::span<const VertexId> out_neighbors(VertexId v) const { return out_[v]; }
  std::span<const VertexId> in_neighbors(VertexId v) const { return in_[v]; }
  bool HasEdge(VertexId src, VertexId dst) const;

  // Sorted by label.
  std::span<const NlfEntry> nlf(VertexId v) const { return nlf_[v]; }
  NlfEntry NlfCounts(VertexId v, LabelId label) const;

  // Alive vertices of the given type, ascending. Empty for kNoLabel.
  std::span<const VertexId> VerticesOfType(LabelId label) const;

  std::vector<VertexId> Vertices() const;
  // Sorted by (src, dst).
  std::vector<Edge> Edges() const;

 private:
  void CheckAlive(VertexId v) const;
  void BumpNlf(VertexId v, LabelId neighbor_label, int in_delta, int out_delta);

  LabelDictionary dict_;
  std::vector<LabelId> labels_of_;
  std::vector<std::string> external_;
  std::unordered_map<std::string, VertexId> by_external_;
  std::vector<bool> alive_;
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
  std::vector<std::vector<NlfEntry>> nlf_;
  std::vector<std::vector<VertexId>> type_index_;
  std::size_t num_alive_ = 0;
  std::size_t num_edges_ = 0;
};

struct LoadStats {
  std::size_t duplicate_edges = 0;
};

// Reads the vertex TSV (`vertex_id<TAB>type_label`) and the edge TSV
// (`src_id<TAB>dst_id`). Lines starting with '#' and blank lines are
// skipped. Duplicate edges are collapsed and counted in `stats`.
Hin LoadGraph(std::istream& vertices, std::istream& edges,
              LoadStats* stats = nullptr);
Hin LoadGraphFiles(const std::string& vertices_path,
                   const std::string& edges_path, LoadStats* stats = nullptr);

// Writes alive vertices and edges using external ids, in dense-id order.
void WriteGraph(const Hin& g, std::ostream& vertices, std::ostream& edges);

// Components of the undirected projection over alive vertices, each sorted
// ascending, components ordered by their smallest member.
std::vector<std::vector<VertexId>> WeaklyConnectedComponents(const Hin& g);

}  // namespace ifcs

#endif  // IFCS_HIN_H_
