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

#ifndef IFCS_RESULT_JSON_H_
#define IFCS_RESULT_JSON_H_

#include <string>

#include "ifcs/hin.h"
#include "ifcs/search.h"

namespace ifcs {

struct ResultJsonOptions {
  std::string motif_file;
  std::size_t k = 2;
  SearchMode mode = SearchMode::kFvaL;
  // Adds a `metrics` array, one entry per community.
  bool include_metrics = false;
  // When false, wall_time_ms is written as 0 so that output depends only
  // on the inputs.
  bool include_timing = true;
};

// Serializes a result with the key order
//   query{motif_file,k,mode}, communities[{members,active_levels,
//   fairness_score}], stats{...}[, metrics]
// Member ids are the graph's external ids.
std::string ResultToJson(const Hin& g, const CommunityResult& result,
                         const ResultJsonOptions& options);

}  // namespace ifcs

#endif  // IFCS_RESULT_JSON_H_
