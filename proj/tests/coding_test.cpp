// Copyright 2026 The qinfo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "qinfo/coding.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

#include "gtest/gtest.h"

using namespace qinfo;

namespace {

// Brute-force oracle: walk every binary sequence of length n as a bitmask,
// compute its probability from scratch.
struct BruteTypical {
  std::uint64_t count = 0;
  double mass = 0.0;
};

BruteTypical brute_binary_typical(double p0, int n, double eps) {
  const double h = -(p0 * std::log2(p0) + (1 - p0) * std::log2(1 - p0));
  BruteTypical out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    double prob = 1.0;
    for (int i = 0; i < n; ++i) prob *= ((mask >> i) & 1) ? (1 - p0) : p0;
    if (std::abs(-std::log2(prob) / n - h) <= eps + 1e-12) {
      ++out.count;
      out.mass += prob;
    }
  }
  return out;
}

// Optimality oracle: minimum of sum p_i l_i over all length vectors in
// [1, n-1]^n satisfying Kraft's inequality (every such vector is realizable
// by a prefix code).
double brute_min_average(const std::vector<double>& p) {
  const int n = static_cast<int>(p.size());
  std::vector<int> l(n, 1);
  double best = INFINITY;
  while (true) {
    double kraft = 0.0;
    double avg = 0.0;
    for (int i = 0; i < n; ++i) {
      kraft += std::ldexp(1.0, -l[i]);
      avg += p[i] * l[i];
    }
    if (kraft <= 1.0 + 1e-15) best = std::min(best, avg);
    int d = 0;
    while (d < n && ++l[d] > n - 1) l[d++] = 1;
    if (d == n) break;
  }
  return best;
}

}  // namespace

TEST(TypicalSet, UniformBinaryAllTypical) {
  const auto r = typical_set({0.5, 0.5}, 10, 0.01);
  EXPECT_EQ(r.count, 1024u);
  EXPECT_DOUBLE_EQ(r.rate, 1.0);
  EXPECT_NEAR(r.total_probability, 1.0, 1e-12);
}

TEST(TypicalSet, DeterministicSource) {
  const auto r = typical_set({1.0, 0.0}, 10, 0.01);
  EXPECT_EQ(r.count, 1u);
  EXPECT_EQ(r.rate, 0.0);
  EXPECT_NEAR(r.total_probability, 1.0, 1e-12);
}

TEST(TypicalSet, MatchesBruteForce) {
  const auto r = typical_set({0.8, 0.2}, 10, 0.1);
  EXPECT_EQ(r.count, 45u);
  EXPECT_NEAR(r.rate, 0.549, 1e-3);
  const auto oracle = brute_binary_typical(0.8, 10, 0.1);
  EXPECT_EQ(r.count, oracle.count);
  EXPECT_NEAR(r.total_probability, oracle.mass, 1e-12);

  for (int n : {6, 9, 13}) {
    for (double eps : {0.05, 0.15, 0.3}) {
      const auto got = typical_set({0.7, 0.3}, static_cast<std::size_t>(n), eps);
      const auto want = brute_binary_typical(0.7, n, eps);
      EXPECT_EQ(got.count, want.count) << n << " " << eps;
      EXPECT_NEAR(got.total_probability, want.mass, 1e-12);
    }
  }
}

TEST(TypicalSet, TotalProbabilityTrend) {
  // For p = (0.8, 0.2), eps = 0.2 the typical set is {k ones : k/N in
  // [0.1, 0.3]}. Its mass is not monotone at small N (the window admits k =
  // 1, 2 at N = 8 but only k = 2, 3 at N = 12); values below are the
  // binomial sums over those k, computed independently.
  const ProbDist p{0.8, 0.2};
  EXPECT_NEAR(typical_set(p, 8, 0.2).total_probability, 0.6291456, 1e-9);
  EXPECT_NEAR(typical_set(p, 12, 0.2).total_probability, 0.5196910428160004, 1e-9);
  EXPECT_NEAR(typical_set(p, 16, 0.2).total_probability, 0.6575079534100485, 1e-9);
  EXPECT_NEAR(typical_set(p, 20, 0.2).total_probability, 0.84413219615619, 1e-9);
  // The asymptotic trend still shows across the ladder.
  EXPECT_GT(typical_set(p, 20, 0.2).total_probability, typical_set(p, 8, 0.2).total_probability);
  EXPECT_GT(typical_set(p, 20, 0.2).total_probability, typical_set(p, 16, 0.2).total_probability);
}

TEST(TypicalSet, CapAndArgumentErrors) {
  EXPECT_THROW(typical_set({0.5, 0.5}, 25, 0.1), DomainError);
  EXPECT_THROW(typical_set({0.5, 0.5}, 5, 0.1, 16), DomainError);
  EXPECT_NO_THROW(typical_set({0.5, 0.5}, 4, 0.1, 16));
  EXPECT_THROW(typical_set({0.5, 0.5}, 4, 0.0), ValidationError);
  EXPECT_THROW(typical_set({0.5, 0.5}, 0, 0.1), ValidationError);
}

TEST(QuestionStrategy, Examples) {
  const auto balanced = question_strategy({0.5, 0.5});
  EXPECT_EQ(balanced.lengths, (std::vector<int>{1, 1}));
  EXPECT_DOUBLE_EQ(balanced.average_length, 1.0);

  const ProbDist p{0.5, 0.3, 0.2};
  const auto c = question_strategy(p);
  EXPECT_EQ(c.lengths, (std::vector<int>{1, 2, 2}));
  EXPECT_NEAR(c.average_length, 1.5, 1e-15);
  EXPECT_NEAR(shannon_entropy(p), 1.485475, 1e-6);

  const auto dyadic = question_strategy(ProbDist::uniform(4));
  EXPECT_DOUBLE_EQ(dyadic.average_length, 2.0);
  EXPECT_DOUBLE_EQ(dyadic.average_length, shannon_entropy(ProbDist::uniform(4)));
}

TEST(QuestionStrategy, SingleSymbolNeedsNoQuestions) {
  const auto c = question_strategy({1.0});
  EXPECT_EQ(c.lengths, std::vector<int>{0});
  EXPECT_EQ(c.average_length, 0.0);
}

TEST(QuestionStrategy, ZeroProbabilitySymbolsGetLongestCodewords) {
  const auto c = question_strategy({0.6, 0.0, 0.4, 0.0});
  EXPECT_LE(c.kraft_sum(), 1.0);
  EXPECT_GE(c.lengths[1], c.lengths[0]);
  EXPECT_GE(c.lengths[3], c.lengths[2]);
}

TEST(QuestionStrategy, TieBreakIsReproducible) {
  // All-equal weights: ties resolved by symbol index, then creation order.
  const auto c = question_strategy(ProbDist::uniform(5));
  EXPECT_EQ(c.lengths, (std::vector<int>{3, 3, 2, 2, 2}));
}

TEST(QuestionStrategy, OptimalAndWithinShannonBound) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 2 + seed % 9;
    const ProbDist p = random_distribution(n, seed);
    const auto c = question_strategy(p);
    const double h = shannon_entropy(p);
    EXPECT_LE(c.kraft_sum(), 1.0 + 1e-15);
    EXPECT_GE(c.average_length, h - 1e-12);
    EXPECT_LT(c.average_length, h + 1.0);
    if (n <= 6) {
      EXPECT_NEAR(c.average_length, brute_min_average(p.vector()), 1e-12) << "seed " << seed;
    }
  }
}

TEST(BlockQuestionRate, Examples) {
  for (std::size_t k : {1u, 2u, 3u, 5u}) EXPECT_DOUBLE_EQ(block_question_rate({0.5, 0.5}, k), 1.0);
  const ProbDist skew{0.9, 0.1};
  EXPECT_DOUBLE_EQ(block_question_rate(skew, 1), 1.0);
  EXPECT_NEAR(shannon_entropy(skew), 0.468996, 1e-6);
  EXPECT_LE(block_question_rate(skew, 4), 0.468996 + 0.25);
  EXPECT_THROW(block_question_rate({0.5, 0.5}, 30), DomainError);
}

TEST(BlockQuestionRate, ApproachesEntropy) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ProbDist p = random_distribution(2 + seed % 4, seed + 100);
    const double h = shannon_entropy(p);
    double prev = INFINITY;
    for (std::size_t k : {1u, 2u, 4u}) {
      const double rate = block_question_rate(p, k);
      EXPECT_GE(rate, h - 1e-12);
      EXPECT_LT(rate, h + 1.0 / static_cast<double>(k));
      EXPECT_LE(rate, prev + 1e-12) << "seed " << seed << " k " << k;
      prev = rate;
    }
  }
}
