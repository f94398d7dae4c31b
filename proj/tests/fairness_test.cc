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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "oracle.h"

namespace ifcs {
namespace {

using Levels = std::vector<ActiveLevel>;

double PairwiseDoubleSum(const Levels& s) {
  double d = 0;
  for (ActiveLevel a : s) {
    for (ActiveLevel b : s) d += a > b ? double(a - b) : double(b - a);
  }
  return d;
}

TEST(FairnessScoreTest, ExampleCommunities) {
  EXPECT_NEAR(FairnessScore(Levels{12, 2, 2, 2, 2}), 0.4, 1e-12);
  EXPECT_NEAR(FairnessScore(Levels{2, 2, 2}), 0.0, 1e-12);
}

TEST(FairnessScoreTest, SmallCases) {
  EXPECT_EQ(FairnessScore(Levels{1}), 0.0);
  EXPECT_NEAR(FairnessScore(Levels{1, 3}), 0.25, 1e-12);  // 4 / (2*2*4)
  EXPECT_NEAR(FairnessScore(Levels{3, 1}), 0.25, 1e-12);
}

TEST(FairnessScoreTest, RejectsEmptyAndZeroLevels) {
  EXPECT_THROW(FairnessScore(Levels{}), std::invalid_argument);
  EXPECT_THROW(FairnessScore(Levels{0, 2}), std::invalid_argument);
  EXPECT_THROW(FairnessScoreSorted(Levels{}), std::invalid_argument);
}

TEST(FairnessScoreSortedTest, RankedForm) {
  EXPECT_NEAR(FairnessScoreSorted(Levels{2, 2, 2, 2, 12}), 0.4, 1e-12);
  EXPECT_EQ(FairnessScoreSorted(Levels{5, 5}), 0.0);
  EXPECT_THROW(FairnessScoreSorted(Levels{3, 1}), std::invalid_argument);
}

TEST(FairnessScoreSortedTest, MatchesDoubleSumOracle) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 1000; ++trial) {
    Levels s(1 + rng() % 60);
    const ActiveLevel range = trial % 3 == 0 ? 3 : 1000;  // heavy ties
    for (auto& x : s) x = 1 + rng() % range;
    std::sort(s.begin(), s.end());
    const std::vector<std::uint64_t> copy(s.begin(), s.end());
    EXPECT_NEAR(FairnessScoreSorted(s), oracle::GiniPairwise(copy), 1e-12);
    EXPECT_NEAR(FairnessScore(s), FairnessScoreSorted(s), 1e-12);
  }
}

TEST(GiniDoubleSumTest, Examples) {
  EXPECT_EQ(GiniDoubleSum(Levels{12, 2, 2, 2, 2}), 80.0);
  EXPECT_EQ(GiniDoubleSum(Levels{7, 7, 7, 7}), 0.0);
}

TEST(GiniDoubleSumTest, MatchesQuadraticScan) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    Levels s(1 + rng() % 80);
    for (auto& x : s) x = 1 + rng() % 500;
    EXPECT_EQ(GiniDoubleSum(s), PairwiseDoubleSum(s));
  }
}

TEST(FairnessPropertyTest, RangeAndZeroIffEqual) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 2000; ++trial) {
    Levels s(1 + rng() % 20);
    for (auto& x : s) x = 1 + rng() % (trial % 2 ? 2 : 1000000);
    const double fs = FairnessScore(s);
    EXPECT_GE(fs, 0.0);
    EXPECT_LT(fs, 1.0);
    const bool equal = std::all_of(s.begin(), s.end(),
                                   [&](ActiveLevel x) { return x == s[0]; });
    EXPECT_EQ(fs == 0.0, equal);
  }
}

TEST(FairnessPropertyTest, ScaleInvariantExactly) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 500; ++trial) {
    Levels s(1 + rng() % 30);
    for (auto& x : s) x = 1 + rng() % 100;
    const ActiveLevel alpha = 1 + rng() % 50;
    Levels scaled = s;
    for (auto& x : scaled) x *= alpha;
    EXPECT_TRUE(ExactFairnessScore(s) == ExactFairnessScore(scaled));
    EXPECT_NEAR(FairnessScore(s), FairnessScore(scaled), 1e-12);
  }
}

TEST(FairnessPropertyTest, ExactScoreMatchesRationalOracle) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 500; ++trial) {
    Levels s(1 + rng() % 30);
    for (auto& x : s) x = 1 + rng() % 9;
    const oracle::Rational want = oracle::GiniPairwiseExact(
        std::vector<std::uint64_t>(s.begin(), s.end()));
    const Fraction got = ExactFairnessScore(s);
    EXPECT_TRUE(got.num * want.den == want.num * got.den);
  }
}

TEST(FairnessPropertyTest, MedianMinimizesDoubleSumForOneFreeValue) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 500; ++trial) {
    Levels l(1 + rng() % 7);
    for (auto& x : l) x = 1 + rng() % 9;
    std::sort(l.begin(), l.end());
    const ActiveLevel lower_middle = l[(l.size() - 1) / 2];
    double best = 1e300;
    for (ActiveLevel x = 1; x <= l.back(); ++x) {
      Levels with = l;
      with.push_back(x);
      best = std::min(best, GiniDoubleSum(with));
    }
    Levels at_median = l;
    at_median.push_back(lower_middle);
    EXPECT_EQ(GiniDoubleSum(at_median), best);
  }
}

TEST(FairnessPropertyTest, ScoreNonDecreasingAboveTheMaximum) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 300; ++trial) {
    Levels s(1 + rng() % 6);
    for (auto& x : s) x = 1 + rng() % 20;
    const ActiveLevel top = *std::max_element(s.begin(), s.end());
    double previous = -1;
    for (ActiveLevel x = top; x <= top + 40; ++x) {
      Levels with = s;
      with.push_back(x);
      const double fs = FairnessScore(with);
      EXPECT_GE(fs, previous - 1e-15);
      previous = fs;
    }
  }
}

TEST(LowerBoundTest, HandComputedExamples) {
  // Median 7 fills the numerator: S = [2,7,7,7,12] gives 80; the maximum
  // fills the denominator: 2*5*(14 + 3*12) = 500.
  EXPECT_NEAR(LowerBound({{12, 2}, 5}), 0.16, 1e-12);
  EXPECT_TRUE(ExactLowerBound({{12, 2}, 5}) == (Fraction{16, 100}));
  EXPECT_EQ(LowerBound({{2, 2, 2}, 3}), 0.0);
  EXPECT_EQ(LowerBound({{5}, 4}), 0.0);
}

TEST(LowerBoundTest, CompleteObservationEqualsScore) {
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 200; ++trial) {
    Levels s(1 + rng() % 10);
    for (auto& x : s) x = 1 + rng() % 30;
    EXPECT_TRUE(ExactLowerBound({s, s.size()}) == ExactFairnessScore(s));
  }
}

TEST(LowerBoundTest, RejectsInvalidObservations) {
  EXPECT_THROW(LowerBound({{}, 3}), std::invalid_argument);
  EXPECT_THROW(LowerBound({{1, 2, 3}, 2}), std::invalid_argument);
  EXPECT_THROW(LowerBound({{0, 2}, 3}), std::invalid_argument);
}

TEST(FractionTest, OrdersByValue) {
  EXPECT_TRUE((Fraction{1, 3}) < (Fraction{1, 2}));
  EXPECT_TRUE((Fraction{2, 4}) == (Fraction{1, 2}));
  EXPECT_FALSE((Fraction{0, 7}) < (Fraction{0, 1}));
  EXPECT_DOUBLE_EQ((Fraction{3, 4}).value(), 0.75);
}

}  // namespace
}  // namespace ifcs
