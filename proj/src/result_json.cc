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

#include "ifcs/result_json.h"

#include <json.hpp>
#include <string>

#include "ifcs/metrics.h"

namespace ifcs {

std::string ResultToJson(const Hin& g, const CommunityResult& result,
                         const ResultJsonOptions& options) {
  using Json = nlohmann::ordered_json;
  Json root;
  root["query"] = Json{{"motif_file", options.motif_file},
                       {"k", options.k},
                       {"mode", std::string(ModeName(options.mode))}};

  Json communities = Json::array();
  for (const Community& c : result.communities) {
    Json members = Json::array();
    Json levels = Json::object();
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      const std::string& id = g.external_id(c.members[i]);
      members.push_back(id);
      levels[id] = c.levels[i];
    }
    communities.push_back(Json{{"members", std::move(members)},
                               {"active_levels", std::move(levels)},
                               {"fairness_score", c.fairness_score}});
  }
  root["communities"] = std::move(communities);

  const SearchStats& s = result.stats;
  root["stats"] = Json{
      {"visited_targets", s.visited_targets},
      {"existence_checks", s.existence_checks},
      {"instances_enumerated", s.instances_enumerated},
      {"bound_computations", s.bound_computations},
      {"components_pruned", s.components_pruned},
      {"survivors_after_nlf", s.survivors_after_nlf},
      {"survivors_after_exploration", s.survivors_after_exploration},
      {"survivors_after_message_passing", s.survivors_after_message_passing},
      {"wall_time_ms", options.include_timing ? s.wall_time_ms : 0.0}};

  if (options.include_metrics) {
    Json metrics = Json::array();
    for (const Community& c : result.communities) {
      const CommunityMetrics m = ComputeMetrics(result.m_graph, c.members);
      Json histogram = Json::object();
      for (const auto& [bin, fraction] : m.r_degree_histogram) {
        histogram[bin == kRDegreeOverflow ? std::to_string(kRDegreeMaxBin) + "+"
                                          : std::to_string(bin)] = fraction;
      }
      metrics.push_back(Json{{"r_degree_histogram", std::move(histogram)},
                             {"density", m.density},
                             {"m_diameter", m.m_diameter}});
    }
    root["metrics"] = std::move(metrics);
  }
  return root.dump(2) + "\n";
}

}  // namespace ifcs
