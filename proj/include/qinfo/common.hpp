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

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace qinfo {

/// Raised when an input violates a documented type invariant (bad
/// distribution, non-Hermitian matrix, mismatched dimensions, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a request is well-formed but outside what the library can
/// compute (enumeration caps, unsupported MUB dimensions, degenerate
/// eigenspaces).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace tol {
/// Entries of a distribution at or above -kClamp are clamped to zero.
inline constexpr double kClamp = 1e-12;
/// Distributions whose sum is within kSum of one are renormalized.
inline constexpr double kSum = 1e-9;
/// Operator-level checks: Hermiticity, trace, eigenvalue positivity.
inline constexpr double kOperator = 1e-9;
/// Default tolerance for majorization comparisons.
inline constexpr double kMajorize = 1e-9;
}  // namespace tol

/// Seeded pseudo-random source. Draws are derived from the raw
/// std::mt19937_64 stream (whose output sequence is fixed by the standard),
/// so results are reproducible across standard library implementations,
/// unlike std::uniform_real_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound).
  std::uint64_t index(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
  }

  /// Standard normal deviate (Box-Muller; the second variate is discarded).
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Exp(1) deviate.
  double exponential() {
    double u = uniform();
    while (u <= 0.0) u = uniform();
    return -std::log(u);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qinfo
