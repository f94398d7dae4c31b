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

#include "ifcs/fairness.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ifcs {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

void CheckLevels(std::span<const ActiveLevel> levels) {
  if (levels.empty()) {
    throw std::invalid_argument("fairness of an empty community");
  }
  for (ActiveLevel s : levels) {
    if (s == 0) throw std::invalid_argument("active level must be positive");
  }
}

// Double sum over a sorted multiset given as (value, multiplicity) runs.
u128 WeightedDoubleSum(std::span<const std::pair<ActiveLevel, u128>> runs) {
  u128 total = 0;
  u128 count_before = 0;
  u128 sum_before = 0;
  for (const auto& [value, weight] : runs) {
    // Each earlier element e pairs with each copy of `value`, twice.
    total +=
        2 * weight * (static_cast<u128>(value) * count_before - sum_before);
    count_before += weight;
    sum_before += weight * value;
  }
  return total;
}

std::vector<std::pair<ActiveLevel, u128>> Runs(std::vector<ActiveLevel> v) {
  std::sort(v.begin(), v.end());
  std::vector<std::pair<ActiveLevel, u128>> runs;
  for (ActiveLevel s : v) {
    if (!runs.empty() && runs.back().first == s) {
      ++runs.back().second;
    } else {
      runs.emplace_back(s, 1);
    }
  }
  return runs;
}

u128 Sum(std::span<const ActiveLevel> levels) {
  u128 sum = 0;
  for (ActiveLevel s : levels) sum += s;
  return sum;
}

}  // namespace

double GiniDoubleSum(std::span<const ActiveLevel> levels) {
  const auto runs = Runs({levels.begin(), levels.end()});
  return static_cast<double>(WeightedDoubleSum(runs));
}

Fraction ExactFairnessScore(std::span<const ActiveLevel> levels) {
  CheckLevels(levels);
  const auto runs = Runs({levels.begin(), levels.end()});
  return {WeightedDoubleSum(runs), 2 * levels.size() * Sum(levels)};
}

double FairnessScore(std::span<const ActiveLevel> levels) {
  CheckLevels(levels);
  std::vector<ActiveLevel> sorted(levels.begin(), levels.end());
  std::sort(sorted.begin(), sorted.end());
  return FairnessScoreSorted(sorted);
}

double FairnessScoreSorted(std::span<const ActiveLevel> sorted_levels) {
  CheckLevels(sorted_levels);
  if (!std::is_sorted(sorted_levels.begin(), sorted_levels.end())) {
    throw std::invalid_argument("levels are not sorted");
  }
  const std::size_t n = sorted_levels.size();
  u128 weighted = 0;
  for (std::size_t i = 0; i < n; ++i) {
    weighted += static_cast<u128>(2 * i + 1) * sorted_levels[i];
  }
  const u128 denom = static_cast<u128>(n) * Sum(sorted_levels);
  // weighted >= denom always; subtracting in integers keeps the result
  // exact up to one final rounding.
  return static_cast<double>(weighted - denom) / static_cast<double>(denom);
}

Fraction ExactLowerBound(const PartialObservation& p) {
  const auto& seen = p.observed;
  CheckLevels(seen);
  if (seen.size() > p.candidate_size) {
    throw std::invalid_argument("more observed levels than candidates");
  }
  std::vector<ActiveLevel> sorted = seen;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t m = sorted.size();
  const u128 missing = p.candidate_size - m;
  // Work with doubled values so an even-count median stays integral.
  const ActiveLevel twice_median =
      m % 2 == 1 ? 2 * sorted[m / 2] : sorted[m / 2 - 1] + sorted[m / 2];

  std::vector<std::pair<ActiveLevel, u128>> runs;
  bool median_placed = missing == 0;
  for (ActiveLevel s : sorted) {
    const ActiveLevel doubled = 2 * s;
    if (!median_placed && twice_median <= doubled) {
      if (twice_median == doubled) {
        runs.emplace_back(doubled, missing);
      } else {
        runs.emplace_back(twice_median, missing);
      }
      median_placed = true;
    }
    if (!runs.empty() && runs.back().first == doubled) {
      runs.back().second += 1;
    } else {
      runs.emplace_back(doubled, 1);
    }
  }
  // numerator(doubled) = 2 * numerator; compensate in the denominator.
  const u128 numerator2 = WeightedDoubleSum(runs);
  const u128 denominator = static_cast<u128>(2) * p.candidate_size *
                           (Sum(seen) + missing * sorted.back());
  return {numerator2, 2 * denominator};
}

double LowerBound(const PartialObservation& p) {
  return ExactLowerBound(p).value();
}

}  // namespace ifcs
