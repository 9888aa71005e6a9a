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

// Classical distributions and the scalar measures defined on them: Shannon
// entropy, surprise, the quadratic information measure,
// conditional entropy, mutual information, majorization and doubly
// stochastic mixing. All logarithms are base 2.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qinfo/common.hpp"

namespace qinfo {

namespace detail {

inline double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// Raw entropy of a non-negative vector, summed in index order. Callers that
// compare two entropies term by term rely on the fixed ordering.
inline double entropy_bits(std::span<const double> p) {
  double h = 0.0;
  for (double x : p) h -= xlog2x(x);
  return h;
}

// Clamp tiny negatives, reject real negatives, renormalize small drift.
inline std::vector<double> sanitize(std::vector<double> values, const char* what) {
  if (values.empty()) throw ValidationError(std::string(what) + ": empty distribution");
  double sum = 0.0;
  for (double& x : values) {
    if (!std::isfinite(x)) throw ValidationError(std::string(what) + ": non-finite entry");
    if (x < -tol::kClamp) {
      throw ValidationError(std::string(what) + ": negative entry " + std::to_string(x));
    }
    if (x < 0.0) x = 0.0;
    sum += x;
  }
  if (std::abs(sum - 1.0) >= tol::kSum) {
    throw ValidationError(std::string(what) + ": entries sum to " + std::to_string(sum) +
                          ", not 1");
  }
  if (sum != 1.0) {
    for (double& x : values) x /= sum;
  }
  return values;
}

}  // namespace detail

/// A finite discrete probability distribution. Construction validates and
/// normalizes; instances are always valid.
class ProbDist {
 public:
  explicit ProbDist(std::vector<double> probs)
      : probs_(detail::sanitize(std::move(probs), "ProbDist")) {}
  ProbDist(std::initializer_list<double> probs) : ProbDist(std::vector<double>(probs)) {}

  static ProbDist uniform(std::size_t n) {
    if (n == 0) throw ValidationError("ProbDist: empty distribution");
    return ProbDist(std::vector<double>(n, 1.0 / static_cast<double>(n)));
  }

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> probs() const { return probs_; }
  const std::vector<double>& vector() const { return probs_; }

  /// Entries in non-increasing order.
  std::vector<double> sorted_descending() const {
    std::vector<double> s = probs_;
    std::sort(s.begin(), s.end(), std::greater<>());
    return s;
  }

 private:
  std::vector<double> probs_;
};

/// Joint distribution p(a_i, b_j); rows index A, columns index B.
class JointDist {
 public:
  explicit JointDist(Eigen::MatrixXd table) : table_(std::move(table)) {
    if (table_.size() == 0) throw ValidationError("JointDist: empty table");
    std::vector<double> flat(table_.data(), table_.data() + table_.size());
    flat = detail::sanitize(std::move(flat), "JointDist");
    std::copy(flat.begin(), flat.end(), table_.data());
  }

  const Eigen::MatrixXd& table() const { return table_; }
  Eigen::Index rows() const { return table_.rows(); }
  Eigen::Index cols() const { return table_.cols(); }

  ProbDist marginal_a() const { return marginal(table_.rowwise().sum()); }
  ProbDist marginal_b() const { return marginal(table_.colwise().sum().transpose()); }

  /// Row-major flattening: all (a, b) outcome pairs as one distribution.
  ProbDist flattened() const {
    std::vector<double> flat;
    flat.reserve(static_cast<std::size_t>(table_.size()));
    for (Eigen::Index i = 0; i < table_.rows(); ++i)
      for (Eigen::Index j = 0; j < table_.cols(); ++j) flat.push_back(table_(i, j));
    return ProbDist(std::move(flat));
  }

  JointDist transposed() const { return JointDist(table_.transpose()); }

  static JointDist product(const ProbDist& a, const ProbDist& b) {
    Eigen::MatrixXd t(static_cast<Eigen::Index>(a.size()), static_cast<Eigen::Index>(b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        t(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a[i] * b[j];
    return JointDist(std::move(t));
  }

 private:
  static ProbDist marginal(const Eigen::VectorXd& v) {
    return ProbDist(std::vector<double>(v.data(), v.data() + v.size()));
  }

  Eigen::MatrixXd table_;
};

/// Square matrix with non-negative entries whose rows and columns each sum
/// to one.
class DoublyStochastic {
 public:
  explicit DoublyStochastic(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
    if (entries_.rows() == 0 || entries_.rows() != entries_.cols())
      throw ValidationError("DoublyStochastic: matrix must be square and non-empty");
    if (!entries_.allFinite()) throw ValidationError("DoublyStochastic: non-finite entry");
    if (entries_.minCoeff() < -tol::kClamp)
      throw ValidationError("DoublyStochastic: negative entry");
    entries_ = entries_.cwiseMax(0.0);
    const double row_dev = (entries_.rowwise().sum().array() - 1.0).abs().maxCoeff();
    const double col_dev = (entries_.colwise().sum().array() - 1.0).abs().maxCoeff();
    if (row_dev >= tol::kSum || col_dev >= tol::kSum)
      throw ValidationError("DoublyStochastic: row or column sum differs from 1");
  }

  static DoublyStochastic identity(std::size_t n) {
    return DoublyStochastic(Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n),
                                                      static_cast<Eigen::Index>(n)));
  }
  static DoublyStochastic flat(std::size_t n) {
    const auto m = static_cast<Eigen::Index>(n);
    return DoublyStochastic(Eigen::MatrixXd::Constant(m, m, 1.0 / static_cast<double>(n)));
  }

  std::size_t size() const { return static_cast<std::size_t>(entries_.rows()); }
  const Eigen::MatrixXd& entries() const { return entries_; }

 private:
  Eigen::MatrixXd entries_;
};

/// H(p) = -sum p_i log2 p_i, with 0 log 0 = 0.
inline double shannon_entropy(const ProbDist& p) { return detail::entropy_bits(p.probs()); }

/// -log2 p_i. Zero-probability outcomes are rejected instead of returning
/// infinity.
inline double surprise(const ProbDist& p, std::size_t i) {
  if (i >= p.size()) throw ValidationError("surprise: outcome index out of range");
  if (p[i] <= 0.0) throw DomainError("surprise: infinite surprise at a zero-probability outcome");
  return -std::log2(p[i]);
}

/// norm * sum (p_i - 1/n)^2. Zero exactly at the uniform distribution;
/// norm * (1 - 1/n) at a deterministic one.
inline double bz_information(const ProbDist& p, double norm = 1.0) {
  if (!(norm > 0.0) || !std::isfinite(norm))
    throw ValidationError("bz_information: normalization must be positive");
  const double inv_n = 1.0 / static_cast<double>(p.size());
  double s = 0.0;
  for (double x : p.probs()) s += (x - inv_n) * (x - inv_n);
  return norm * s;
}

/// Grouping-axiom residual for p = (p_1..p_{n-1}, q_1, q_2):
///   H(p_1..p_{n-1}, q_1, q_2) - H(p_1..p_{n-1}, q_1+q_2)
///     - (q_1+q_2) H(q_1/(q_1+q_2), q_2/(q_1+q_2)).
/// Zero for the Shannon measure up to rounding.
inline double faddeev_residual(const ProbDist& p) {
  if (p.size() < 2) throw ValidationError("faddeev_residual: need at least two entries");
  const auto probs = p.probs();
  const double q1 = probs[probs.size() - 2];
  const double q2 = probs[probs.size() - 1];
  const double merged = q1 + q2;
  if (merged <= 0.0)
    throw DomainError("faddeev_residual: q1 + q2 = 0, conditional distribution undefined");

  std::vector<double> coarse(probs.begin(), probs.end() - 1);
  coarse.back() = merged;
  const double conditional[2] = {q1 / merged, q2 / merged};

  const double lhs = detail::entropy_bits(probs);
  const double rhs = detail::entropy_bits(coarse) + merged * detail::entropy_bits(conditional);
  return lhs - rhs;
}

/// H(A|B) = sum_j p(b_j) H(p(a | b_j)); columns with p(b_j) = 0 contribute 0.
inline double conditional_entropy(const JointDist& j) {
  const auto& t = j.table();
  double h = 0.0;
  for (Eigen::Index b = 0; b < t.cols(); ++b) {
    const double pb = t.col(b).sum();
    if (pb <= 0.0) continue;
    double hb = 0.0;
    for (Eigen::Index a = 0; a < t.rows(); ++a) hb -= detail::xlog2x(t(a, b) / pb);
    h += pb * hb;
  }
  return h;
}

/// H(A:B) = H(A) - H(A|B).
inline double mutual_information(const JointDist& j) {
  return shannon_entropy(j.marginal_a()) - conditional_entropy(j);
}

/// True iff p majorizes q: every partial sum of the k largest entries of p
/// is at least that of q (minus tol). The shorter vector is zero-padded.
inline bool majorizes(const ProbDist& p, const ProbDist& q, double tolerance = tol::kMajorize) {
  std::vector<double> a = p.sorted_descending();
  std::vector<double> b = q.sorted_descending();
  const std::size_t n = std::max(a.size(), b.size());
  a.resize(n, 0.0);
  b.resize(n, 0.0);
  double sa = 0.0;
  double sb = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sa += a[k];
    sb += b[k];
    if (sa < sb - tolerance) return false;
  }
  return true;
}

/// q_i = sum_j S_ij p_j.
inline ProbDist apply_doubly_stochastic(const DoublyStochastic& s, const ProbDist& p) {
  if (s.size() != p.size())
    throw ValidationError("apply_doubly_stochastic: dimension mismatch");
  const Eigen::Map<const Eigen::VectorXd> pv(p.probs().data(),
                                             static_cast<Eigen::Index>(p.size()));
  const Eigen::VectorXd q = s.entries() * pv;
  return ProbDist(std::vector<double>(q.data(), q.data() + q.size()));
}

/// Convex combination of n+1 seeded random permutation matrices with seeded
/// random weights (Birkhoff form). Deterministic per (n, seed).
inline DoublyStochastic random_doubly_stochastic(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw ValidationError("random_doubly_stochastic: n must be positive");
  Rng rng(seed);
  const std::size_t terms = n + 1;
  std::vector<double> weights(terms);
  double total = 0.0;
  for (double& w : weights) {
    w = rng.exponential();
    total += w;
  }
  const auto m = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(m, m);
  std::vector<std::size_t> perm(n);
  for (std::size_t t = 0; t < terms; ++t) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.index(i)]);
    for (std::size_t i = 0; i < n; ++i)
      s(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(perm[i])) += weights[t] / total;
  }
  return DoublyStochastic(std::move(s));
}

/// Seeded random distribution with strictly positive entries (flat Dirichlet).
inline ProbDist random_distribution(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw ValidationError("random_distribution: n must be positive");
  Rng rng(seed);
  std::vector<double> v(n);
  double total = 0.0;
  for (double& x : v) {
    x = rng.exponential();
    total += x;
  }
  for (double& x : v) x /= total;
  return ProbDist(std::move(v));
}

}  // namespace qinfo
