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

#include "ifcs/hin.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>

#include "ifcs/errors.h"
#include "tsv.h"

namespace ifcs {

LabelId LabelDictionary::Intern(std::string_view name) {
  if (name.empty()) throw ValidationError("empty type label");
  auto it = codes_.find(std::string(name));
  if (it != codes_.end()) return it->second;
  const auto id = static_cast<LabelId>(names_.size());
  names_.emplace_back(name);
  codes_.emplace(names_.back(), id);
  return id;
}

LabelId LabelDictionary::Find(std::string_view name) const {
  auto it = codes_.find(std::string(name));
  return it == codes_.end() ? kNoLabel : it->second;
}

namespace {

void InsertSorted(std::vector<VertexId>& list, VertexId v) {
  list.insert(std::lower_bound(list.begin(), list.end(), v), v);
}

void EraseSorted(std::vector<VertexId>& list, VertexId v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it != list.end() && *it == v) list.erase(it);
}

}  // namespace

VertexId Hin::AddVertex(std::string_view label, std::string external_id) {
  const LabelId code = dict_.Intern(label);
  const auto v = static_cast<VertexId>(labels_of_.size());
  if (external_id.empty()) external_id = std::to_string(v);
  if (!by_external_.emplace(external_id, v).second) {
    throw ValidationError("duplicate vertex id '" + external_id + "'");
  }
  labels_of_.push_back(code);
  external_.push_back(std::move(external_id));
  alive_.push_back(true);
  out_.emplace_back();
  in_.emplace_back();
  nlf_.emplace_back();
  if (type_index_.size() <= code) type_index_.resize(code + 1);
  type_index_[code].push_back(v);  // ids grow, so stays sorted
  ++num_alive_;
  return v;
}

void Hin::CheckAlive(VertexId v) const {
  if (!contains(v)) {
    throw ReferenceError("unknown vertex " + std::to_string(v));
  }
}

void Hin::BumpNlf(VertexId v, LabelId neighbor_label, int in_delta,
                  int out_delta) {
  auto& entries = nlf_[v];
  auto it = std::lower_bound(
      entries.begin(), entries.end(), neighbor_label,
      [](const NlfEntry& e, LabelId l) { return e.label < l; });
  if (it == entries.end() || it->label != neighbor_label) {
    it = entries.insert(it, NlfEntry{neighbor_label, 0, 0});
  }
  it->in_count += in_delta;
  it->out_count += out_delta;
  if (it->in_count == 0 && it->out_count == 0) entries.erase(it);
}

bool Hin::AddEdge(VertexId src, VertexId dst) {
  CheckAlive(src);
  CheckAlive(dst);
  if (src == dst) {
    throw ValidationError("self-loop on vertex '" + external_[src] + "'");
  }
  if (HasEdge(src, dst)) return false;
  InsertSorted(out_[src], dst);
  InsertSorted(in_[dst], src);
  BumpNlf(src, labels_of_[dst], 0, 1);
  BumpNlf(dst, labels_of_[src], 1, 0);
  ++num_edges_;
  return true;
}

std::size_t Hin::AddEdges(std::vector<Edge> edges) {
  for (const Edge& e : edges) {
    CheckAlive(e.src);
    CheckAlive(e.dst);
    if (e.src == e.dst) {
      throw ValidationError("self-loop on vertex '" + external_[e.src] + "'");
    }
  }
  std::sort(edges.begin(), edges.end());
  const std::size_t before = edges.size();
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::size_t duplicates = before - edges.size();

  std::vector<Edge> fresh;
  fresh.reserve(edges.size());
  for (const Edge& e : edges) {
    if (HasEdge(e.src, e.dst)) {
      ++duplicates;
    } else {
      fresh.push_back(e);
    }
  }
  // Appending then re-sorting each touched list keeps this O(E log E).
  std::vector<VertexId> touched;
  for (const Edge& e : fresh) {
    out_[e.src].push_back(e.dst);
    in_[e.dst].push_back(e.src);
    touched.push_back(e.src);
    touched.push_back(e.dst);
    BumpNlf(e.src, labels_of_[e.dst], 0, 1);
    BumpNlf(e.dst, labels_of_[e.src], 1, 0);
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  for (VertexId v : touched) {
    std::sort(out_[v].begin(), out_[v].end());
    std::sort(in_[v].begin(), in_[v].end());
  }
  num_edges_ += fresh.size();
  return duplicates;
}

void Hin::DeleteVertices(std::span<const VertexId> victims) {
  for (VertexId v : victims) CheckAlive(v);
  std::vector<VertexId> sorted(victims.begin(), victims.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ReferenceError("vertex listed twice for deletion");
  }
  for (VertexId v : sorted) {
    for (VertexId w : out_[v]) {
      EraseSorted(in_[w], v);
      BumpNlf(w, labels_of_[v], -1, 0);
    }
    for (VertexId w : in_[v]) {
      EraseSorted(out_[w], v);
      BumpNlf(w, labels_of_[v], 0, -1);
    }
    num_edges_ -= out_[v].size() + in_[v].size();
    out_[v].clear();
    in_[v].clear();
    nlf_[v].clear();
    alive_[v] = false;
    EraseSorted(type_index_[labels_of_[v]], v);
    --num_alive_;
  }
}

Hin Hin::InducedByEdges(std::span<const Edge> edges) const {
  for (const Edge& e : edges) {
    if (!contains(e.src) || !contains(e.dst) || !HasEdge(e.src, e.dst)) {
      throw ReferenceError("edge " + std::to_string(e.src) + "->" +
                           std::to_string(e.dst) + " is not in the graph");
    }
  }
  std::vector<bool> keep(id_bound(), false);
  for (const Edge& e : edges) keep[e.src] = keep[e.dst] = true;

  Hin out = *this;
  std::vector<VertexId> drop;
  for (VertexId v = 0; v < id_bound(); ++v) {
    if (alive_[v] && !keep[v]) drop.push_back(v);
  }
  out.DeleteVertices(drop);
  // Remaining vertices may still share edges outside `edges`; rebuild the
  // edge set from scratch.
  for (VertexId v = 0; v < id_bound(); ++v) {
    out.out_[v].clear();
    out.in_[v].clear();
    out.nlf_[v].clear();
  }
  out.num_edges_ = 0;
  out.AddEdges(std::vector<Edge>(edges.begin(), edges.end()));
  return out;
}

Hin Hin::InducedByVertices(std::span<const VertexId> keep) const {
  std::vector<bool> kept(id_bound(), false);
  for (VertexId v : keep) {
    CheckAlive(v);
    kept[v] = true;
  }
  Hin out = *this;
  std::vector<VertexId> drop;
  for (VertexId v = 0; v < id_bound(); ++v) {
    if (alive_[v] && !kept[v]) drop.push_back(v);
  }
  out.DeleteVertices(drop);
  return out;
}

std::optional<VertexId> Hin::FindExternal(std::string_view external_id) const {
  auto it = by_external_.find(std::string(external_id));
  if (it == by_external_.end()) return std::nullopt;
  return it->second;
}

bool Hin::HasEdge(VertexId src, VertexId dst) const {
  if (src >= out_.size()) return false;
  const auto& list = out_[src];
  return std::binary_search(list.begin(), list.end(), dst);
}

NlfEntry Hin::NlfCounts(VertexId v, LabelId label) const {
  const auto& entries = nlf_[v];
  auto it = std::lower_bound(
      entries.begin(), entries.end(), label,
      [](const NlfEntry& e, LabelId l) { return e.label < l; });
  if (it == entries.end() || it->label != label) return {label, 0, 0};
  return *it;
}

std::span<const VertexId> Hin::VerticesOfType(LabelId label) const {
  if (label >= type_index_.size()) return {};
  return type_index_[label];
}

std::vector<VertexId> Hin::Vertices() const {
  std::vector<VertexId> out;
  out.reserve(num_alive_);
  for (VertexId v = 0; v < id_bound(); ++v) {
    if (alive_[v]) out.push_back(v);
  }
  return out;
}

std::vector<Edge> Hin::Edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (VertexId v = 0; v < id_bound(); ++v) {
    for (VertexId w : out_[v]) out.push_back({v, w});
  }
  return out;
}

Hin LoadGraph(std::istream& vertices, std::istream& edges, LoadStats* stats) {
  Hin g;
  ForEachTsvRow(vertices, [&](std::size_t line,
                              const std::vector<std::string_view>& fields) {
    if (fields.size() != 2) {
      throw ParseError(line, "expected 'vertex_id<TAB>type_label'");
    }
    if (fields[0].empty() || fields[1].empty()) {
      throw ParseError(line, "empty vertex id or type label");
    }
    try {
      g.AddVertex(fields[1], std::string(fields[0]));
    } catch (const ValidationError& e) {
      throw ParseError(line, e.what());
    }
  });

  std::vector<Edge> edge_list;
  ForEachTsvRow(edges, [&](std::size_t line,
                           const std::vector<std::string_view>& fields) {
    if (fields.size() != 2) {
      throw ParseError(line, "expected 'src_id<TAB>dst_id'");
    }
    auto src = g.FindExternal(fields[0]);
    auto dst = g.FindExternal(fields[1]);
    if (!src || !dst) {
      throw ReferenceError("line " + std::to_string(line) +
                           ": edge references unknown vertex '" +
                           std::string(src ? fields[1] : fields[0]) + "'");
    }
    if (*src == *dst) {
      throw ValidationError("line " + std::to_string(line) +
                            ": self-loop on vertex '" + std::string(fields[0]) +
                            "'");
    }
    edge_list.push_back({*src, *dst});
  });
  const std::size_t dups = g.AddEdges(std::move(edge_list));
  if (stats != nullptr) stats->duplicate_edges = dups;
  return g;
}

Hin LoadGraphFiles(const std::string& vertices_path,
                   const std::string& edges_path, LoadStats* stats) {
  std::ifstream vin(vertices_path);
  if (!vin) throw InputError("cannot open vertices file " + vertices_path);
  std::ifstream ein(edges_path);
  if (!ein) throw InputError("cannot open edges file " + edges_path);
  return LoadGraph(vin, ein, stats);
}

void WriteGraph(const Hin& g, std::ostream& vertices, std::ostream& edges) {
  for (VertexId v : g.Vertices()) {
    vertices << g.external_id(v) << '\t' << g.labels().Name(g.label(v)) << '\n';
  }
  for (const Edge& e : g.Edges()) {
    edges << g.external_id(e.src) << '\t' << g.external_id(e.dst) << '\n';
  }
}

std::vector<std::vector<VertexId>> WeaklyConnectedComponents(const Hin& g) {
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
  // Roots are visited ascending, so components are already ordered by
  // their smallest member.
  return components;
}

}  // namespace ifcs
