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

#include "ifcs/metrics.h"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace ifcs {
namespace {

// Position of each member in `community`.
std::unordered_map<VertexId, std::size_t> IndexMembers(
    const Digraph& mg, std::span<const VertexId> community) {
  std::unordered_map<VertexId, std::size_t> index;
  for (std::size_t i = 0; i < community.size(); ++i) {
    if (!mg.contains(community[i])) {
      throw std::invalid_argument("community member is not in the M-graph");
    }
    index.emplace(community[i], i);
  }
  return index;
}

}  // namespace

std::vector<std::size_t> RDegrees(const Digraph& mg,
                                  std::span<const VertexId> community) {
  const auto index = IndexMembers(mg, community);
  std::vector<std::size_t> degrees;
  degrees.reserve(community.size());
  for (VertexId v : community) {
    std::size_t d = 0;
    for (VertexId w : mg.out_neighbors(v)) d += index.count(w);
    degrees.push_back(d);
  }
  return degrees;
}

std::map<std::size_t, double> RDegreeHistogram(
    const Digraph& mg, std::span<const VertexId> community) {
  std::map<std::size_t, double> histogram;
  const auto degrees = RDegrees(mg, community);
  for (std::size_t d : degrees) {
    histogram[std::min(d, kRDegreeOverflow)] += 1.0;
  }
  for (auto& [bin, fraction] : histogram) fraction /= degrees.size();
  return histogram;
}

std::size_t MDistanceDiameter(const Digraph& mg,
                              std::span<const VertexId> community) {
  const auto index = IndexMembers(mg, community);
  const std::size_t n = community.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto list :
         {mg.out_neighbors(community[i]), mg.in_neighbors(community[i])}) {
      for (VertexId w : list) {
        auto it = index.find(w);
        if (it != index.end()) adj[i].push_back(it->second);
      }
    }
  }
  std::size_t diameter = 0;
  std::vector<std::size_t> dist(n);
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[s] = 0;
    std::deque<std::size_t> queue{s};
    std::size_t reached = 0;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      ++reached;
      diameter = std::max(diameter, dist[x]);
      for (std::size_t y : adj[x]) {
        if (dist[y] == kUnseen) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
    if (reached != n) {
      throw std::invalid_argument("community is not M-connected");
    }
  }
  return diameter;
}

double Density(const Digraph& mg, std::span<const VertexId> community) {
  if (community.empty()) {
    throw std::invalid_argument("density of an empty community");
  }
  const auto index = IndexMembers(mg, community);
  std::size_t pairs = 0;
  for (VertexId v : community) {
    for (VertexId w : mg.out_neighbors(v)) {
      if (!index.count(w)) continue;
      // Count a reciprocal pair once, from its smaller endpoint.
      if (!mg.HasEdge(w, v) || v < w) ++pairs;
    }
  }
  return static_cast<double>(pairs) / static_cast<double>(community.size());
}

CommunityMetrics ComputeMetrics(const Digraph& mg,
                                std::span<const VertexId> community) {
  CommunityMetrics m;
  m.r_degree_histogram = RDegreeHistogram(mg, community);
  m.density = Density(mg, community);
  m.m_diameter = MDistanceDiameter(mg, community);
  return m;
}

}  // namespace ifcs
