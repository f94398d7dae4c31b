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

#ifndef IFCS_FAIRNESS_H_
#define IFCS_FAIRNESS_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ifcs {

// Number of motif instances around a community member.
using ActiveLevel = std::uint64_t;

// Non-negative rational with 128-bit parts. Scores are compared through
// this type so that ties between communities are detected exactly.
struct Fraction {
  unsigned __int128 num = 0;
  unsigned __int128 den = 1;

  double value() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  friend std::strong_ordering operator<=>(const Fraction& a,
                                          const Fraction& b) {
    return a.num * b.den <=> b.num * a.den;
  }
  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num * b.den == b.num * a.den;
  }
};

// Sum of |s_i - s_j| over all ordered pairs (each unordered pair counted
// twice). Computed from the sorted prefix-sum identity in O(n log n).
double GiniDoubleSum(std::span<const ActiveLevel> levels);

// Gini coefficient of the levels: double sum / (2 n sum). Throws
// std::invalid_argument on empty input or a zero level.
double FairnessScore(std::span<const ActiveLevel> levels);

// Same score from a non-decreasing list, evaluated as
//   sum_i (2i - 1) s_i / (n sum_j s_j) - 1.
// Ties are allowed. Throws std::invalid_argument if unsorted.
double FairnessScoreSorted(std::span<const ActiveLevel> sorted_levels);

// Exact value of FairnessScore.
Fraction ExactFairnessScore(std::span<const ActiveLevel> levels);

// Active levels seen so far for part of a candidate community of
// `candidate_size` members.
struct PartialObservation {
  std::vector<ActiveLevel> observed;
  std::size_t candidate_size = 0;
};

// Lower bound on the score of any community that contains the observed
// members, has at most candidate_size members, and whose unobserved members
// have levels in [1, max(observed)]. The numerator fills the unobserved
// slots with the median of the observed levels (mean of the two middle
// values for even counts); the denominator fills them with the maximum.
// Throws std::invalid_argument on an invalid observation.
double LowerBound(const PartialObservation& p);
Fraction ExactLowerBound(const PartialObservation& p);

}  // namespace ifcs

#endif  // IFCS_FAIRNESS_H_
