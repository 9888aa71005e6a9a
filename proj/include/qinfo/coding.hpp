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

// Desk-scale noiseless coding: exact typical-set enumeration and optimal
// binary prefix codes (equivalently, optimal yes/no questioning strategies).

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <queue>
#include <string>
#include <tuple>
#include <vector>

#include "qinfo/prob.hpp"

namespace qinfo {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

struct TypicalSetReport {
  ProbDist source;
  std::size_t block_length;
  double epsilon;
  std::uint64_t count;
  double rate;  // log2(count) / N, bits per symbol
  double total_probability;
};

struct PrefixCode {
  std::vector<int> lengths;
  double average_length;

  double kraft_sum() const {
    double s = 0.0;
    for (int l : lengths) s += std::ldexp(1.0, -l);
    return s;
  }
};

namespace detail {

// n^k, or cap + 1 once the product exceeds cap.
inline std::uint64_t capped_power(std::size_t n, std::size_t k, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > cap / n) return cap + 1;
    r *= n;
  }
  return r;
}

}  // namespace detail

/// Enumerates all n^N sequences of length N and counts those that are
/// entropy-typical: |-(1/N) log2 P(x) - H(p)| <= epsilon.
inline TypicalSetReport typical_set(const ProbDist& p, std::size_t block_length, double epsilon,
                                    std::uint64_t cap = kDefaultEnumerationCap) {
  if (block_length == 0) throw ValidationError("typical_set: block length must be positive");
  if (!(epsilon > 0.0)) throw ValidationError("typical_set: epsilon must be positive");
  const std::size_t n = p.size();
  const std::uint64_t total = detail::capped_power(n, block_length, cap);
  if (total > cap) {
    throw DomainError("typical_set: " + std::to_string(n) + "^" + std::to_string(block_length) +
                      " sequences exceed the enumeration cap; use a smaller N");
  }

  const double h = shannon_entropy(p);
  std::vector<double> log_p(n);
  for (std::size_t i = 0; i < n; ++i) log_p[i] = p[i] > 0.0 ? std::log2(p[i]) : -INFINITY;

  // Odometer over sequences; prefix log-probabilities are cached per depth so
  // each step costs O(changed digits).
  std::vector<std::size_t> digits(block_length, 0);
  std::vector<double> prefix(block_length + 1, 0.0);
  std::vector<double> prefix_prob(block_length + 1, 1.0);
  for (std::size_t d = 0; d < block_length; ++d) {
    prefix[d + 1] = prefix[d] + log_p[0];
    prefix_prob[d + 1] = prefix_prob[d] * p[0];
  }

  const double inv_n = 1.0 / static_cast<double>(block_length);
  std::uint64_t count = 0;
  double mass = 0.0;
  for (std::uint64_t s = 0; s < total; ++s) {
    const double lp = prefix[block_length];
    // Inclusive boundary: sequences landing exactly on +-epsilon in exact
    // arithmetic must not be lost to rounding.
    if (std::isfinite(lp) && std::abs(-lp * inv_n - h) <= epsilon + 1e-12) {
      ++count;
      mass += prefix_prob[block_length];
    }
    std::size_t d = block_length;
    while (d > 0) {
      --d;
      if (++digits[d] < n) break;
      digits[d] = 0;
    }
    for (; d < block_length; ++d) {
      prefix[d + 1] = prefix[d] + log_p[digits[d]];
      prefix_prob[d + 1] = prefix_prob[d] * p[digits[d]];
    }
  }

  const double rate = count > 0 ? std::log2(static_cast<double>(count)) * inv_n : 0.0;
  return TypicalSetReport{p, block_length, epsilon, count, rate, std::min(mass, 1.0)};
}

/// Optimal binary prefix code (Huffman). Ties are broken by the lowest
/// original symbol index in each subtree, then by creation order, so the
/// lengths are reproducible. A single-symbol source gets length 0: no
/// question is needed.
inline PrefixCode question_strategy(const ProbDist& p) {
  const std::size_t n = p.size();
  if (n == 1) return PrefixCode{{0}, 0.0};

  struct Node {
    double prob;
    std::size_t min_symbol;
    std::size_t order;
    std::size_t left;
    std::size_t right;
  };
  std::vector<Node> nodes;
  nodes.reserve(2 * n - 1);
  constexpr std::size_t kLeaf = static_cast<std::size_t>(-1);
  for (std::size_t i = 0; i < n; ++i) nodes.push_back({p[i], i, i, kLeaf, kLeaf});

  auto key = [&nodes](std::size_t id) {
    return std::make_tuple(nodes[id].prob, nodes[id].min_symbol, nodes[id].order);
  };
  auto greater = [&key](std::size_t a, std::size_t b) { return key(a) > key(b); };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(greater)> heap(greater);
  for (std::size_t i = 0; i < n; ++i) heap.push(i);

  while (heap.size() > 1) {
    const std::size_t a = heap.top();
    heap.pop();
    const std::size_t b = heap.top();
    heap.pop();
    const std::size_t id = nodes.size();
    nodes.push_back({nodes[a].prob + nodes[b].prob,
                     std::min(nodes[a].min_symbol, nodes[b].min_symbol), id, a, b});
    heap.push(id);
  }

  std::vector<int> lengths(n, 0);
  std::vector<std::pair<std::size_t, int>> stack{{heap.top(), 0}};
  while (!stack.empty()) {
    const auto [id, depth] = stack.back();
    stack.pop_back();
    if (nodes[id].left == kLeaf) {
      lengths[id] = depth;
    } else {
      stack.emplace_back(nodes[id].left, depth + 1);
      stack.emplace_back(nodes[id].right, depth + 1);
    }
  }

  double avg = 0.0;
  for (std::size_t i = 0; i < n; ++i) avg += p[i] * lengths[i];
  return PrefixCode{std::move(lengths), avg};
}

/// k-fold product distribution p^{(x) k}, outcomes in lexicographic order.
inline ProbDist product_distribution(const ProbDist& p, std::size_t k,
                                     std::uint64_t cap = kDefaultEnumerationCap) {
  if (k == 0) throw ValidationError("product_distribution: k must be positive");
  if (detail::capped_power(p.size(), k, cap) > cap)
    throw DomainError("product_distribution: outcome count exceeds the enumeration cap");
  std::vector<double> cur(p.probs().begin(), p.probs().end());
  for (std::size_t step = 1; step < k; ++step) {
    std::vector<double> next;
    next.reserve(cur.size() * p.size());
    for (double a : cur)
      for (double b : p.probs()) next.push_back(a * b);
    cur = std::move(next);
  }
  return ProbDist(std::move(cur));
}

/// Average number of yes/no questions per symbol when asking optimally about
/// blocks of k independent outcomes: H(p) <= result < H(p) + 1/k.
inline double block_question_rate(const ProbDist& p, std::size_t k,
                                  std::uint64_t cap = kDefaultEnumerationCap) {
  const ProbDist block = product_distribution(p, k, cap);
  return question_strategy(block).average_length / static_cast<double>(k);
}

}  // namespace qinfo
