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

#ifndef IFCS_METRICS_H_
#define IFCS_METRICS_H_

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "ifcs/digraph.h"

namespace ifcs {

// Degrees above this share one overflow bin keyed kRDegreeOverflow.
inline constexpr std::size_t kRDegreeMaxBin = 20;
inline constexpr std::size_t kRDegreeOverflow = kRDegreeMaxBin + 1;

struct CommunityMetrics {
  // r-degree -> fraction of members; sums to 1.
  std::map<std::size_t, double> r_degree_histogram;
  double density = 0;
  std::size_t m_diameter = 0;
};

// Distinct M-neighbors of each member inside the community (out-edges of
// the M-graph), in community order. Throws std::invalid_argument if a
// member is not an M-graph vertex.
std::vector<std::size_t> RDegrees(const Digraph& mg,
                                  std::span<const VertexId> community);

std::map<std::size_t, double> RDegreeHistogram(
    const Digraph& mg, std::span<const VertexId> community);

// Longest shortest path between members, ignoring edge direction and
// staying inside the community. Throws std::invalid_argument when the
// community is not weakly connected.
std::size_t MDistanceDiameter(const Digraph& mg,
                              std::span<const VertexId> community);

// Member pairs linked by an M-edge in either direction, divided by the
// number of members. Throws std::invalid_argument on an empty community.
double Density(const Digraph& mg, std::span<const VertexId> community);

CommunityMetrics ComputeMetrics(const Digraph& mg,
                                std::span<const VertexId> community);

}  // namespace ifcs

#endif  // IFCS_METRICS_H_
