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

// Mutually unbiased bases: construction for n = 2 and odd primes, exhaustive
// verification, the total-information sum over a complete set, and linear
// state reconstruction from complete-set statistics.

#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qinfo/prob.hpp"
#include "qinfo/quantum.hpp"

namespace qinfo {

/// A collection of projective bases sharing one dimension. A complete set
/// has dim + 1 bases; partial sets are allowed so that verify_unbiased can
/// report on arbitrary collections.
class MubSet {
 public:
  MubSet(std::size_t dim, std::vector<ProjectiveBasis> bases) : dim_(dim), bases_(std::move(bases)) {
    if (dim_ == 0) throw ValidationError("MubSet: dimension must be positive");
    for (const auto& b : bases_) require_same_dim(b.dim(), dim_, "MubSet");
  }

  std::size_t dim() const { return dim_; }
  const std::vector<ProjectiveBasis>& bases() const { return bases_; }
  std::size_t size() const { return bases_.size(); }
  bool complete() const { return bases_.size() == dim_ + 1; }

 private:
  std::size_t dim_;
  std::vector<ProjectiveBasis> bases_;
};

struct ProjectorPair {
  std::size_t basis_a = 0;
  std::size_t vector_a = 0;
  std::size_t basis_b = 0;
  std::size_t vector_b = 0;
};

struct UnbiasedReport {
  double max_deviation = 0.0;  // max |Tr(PQ) - 1/n| over cross-basis pairs
  ProjectorPair worst;
  std::size_t pairs_checked = 0;
  bool passed = true;
};

struct OrthogonalityReport {
  double max_overlap = 0.0;  // max |Tr((P - 1/n)(Q - 1/n))| over cross-basis pairs
  ProjectorPair worst;
  std::size_t pairs_checked = 0;
  bool passed = true;
};

inline bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Complete set of n + 1 mutually unbiased bases. For n = 2: the z, x and y
/// Pauli eigenbases. For an odd prime p: the computational basis followed by
/// p bases whose m-th vector has components p^{-1/2} w^{k l^2 + m l},
/// w = exp(2 pi i / p), k = 0..p-1.
inline MubSet build_mubs(std::size_t n) {
  if (n == 2) {
    return MubSet(2, {spin_basis({0, 0, 1}), spin_basis({1, 0, 0}), spin_basis({0, 1, 0})});
  }
  if (n < 3 || !is_prime(n)) {
    throw DomainError("build_mubs: no complete construction implemented for dimension " +
                      std::to_string(n));
  }
  const auto d = static_cast<Eigen::Index>(n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<ProjectiveBasis> bases;
  bases.reserve(n + 1);
  bases.push_back(ProjectiveBasis::computational(n));
  for (std::size_t k = 0; k < n; ++k) {
    CMatrix v(d, d);
    for (std::size_t m = 0; m < n; ++m) {
      for (std::size_t l = 0; l < n; ++l) {
        // Reduce the exponent mod p in integers so the phase stays exact.
        const std::size_t e = (k * l % n * l + m * l) % n;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(n);
        v(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(m)) = std::polar(amp, angle);
      }
    }
    bases.emplace_back(v);
  }
  return MubSet(n, std::move(bases));
}

/// Exhaustive check of Tr(PQ) = |<u|v>|^2 = 1/n over every pair of vectors
/// drawn from different bases.
inline UnbiasedReport verify_unbiased(const MubSet& m, double tolerance = tol::kOperator) {
  UnbiasedReport r;
  const double inv_n = 1.0 / static_cast<double>(m.dim());
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      const CMatrix overlaps = m.bases()[a].vectors().adjoint() * m.bases()[b].vectors();
      for (Eigen::Index i = 0; i < overlaps.rows(); ++i) {
        for (Eigen::Index j = 0; j < overlaps.cols(); ++j) {
          const double dev = std::abs(std::norm(overlaps(i, j)) - inv_n);
          ++r.pairs_checked;
          if (dev > r.max_deviation) {
            r.max_deviation = dev;
            r.worst = {a, static_cast<std::size_t>(i), b, static_cast<std::size_t>(j)};
          }
        }
      }
    }
  }
  r.passed = r.max_deviation <= tolerance;
  return r;
}

/// Projectors centred on the trace hyperplane, P - 1/n.
inline HermitianOperator centered_projector(const ProjectiveBasis& b, std::size_t i) {
  const auto n = static_cast<Eigen::Index>(b.dim());
  return HermitianOperator(b.projector(i) - CMatrix::Identity(n, n) / static_cast<double>(n));
}

/// Checks Tr((P - 1/n)(Q - 1/n)) = 0 for projectors from different bases,
/// computed from the operators themselves.
inline OrthogonalityReport hyperplane_orthogonality(const MubSet& m,
                                                    double tolerance = tol::kOperator) {
  OrthogonalityReport r;
  std::vector<std::vector<HermitianOperator>> centered(m.size());
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t i = 0; i < m.dim(); ++i) centered[a].push_back(centered_projector(m.bases()[a], i));

  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
          const double overlap = std::abs(hs_inner(centered[a][i], centered[b][j]));
          ++r.pairs_checked;
          if (overlap > r.max_overlap) {
            r.max_overlap = overlap;
            r.worst = {a, i, b, j};
          }
        }
      }
    }
  }
  r.passed = r.max_overlap <= tolerance;
  return r;
}

/// Born statistics of rho in every basis of the set.
inline std::vector<ProbDist> mub_statistics(const DensityOperator& rho, const MubSet& m) {
  require_same_dim(rho.dim(), m.dim(), "mub_statistics");
  std::vector<ProbDist> out;
  out.reserve(m.size());
  for (const auto& b : m.bases()) out.push_back(born_probabilities(rho, b));
  return out;
}

/// Per-basis quadratic information I(p^j), unnormalized.
inline std::vector<double> information_per_basis(const DensityOperator& rho, const MubSet& m) {
  std::vector<double> out;
  for (const auto& p : mub_statistics(rho, m)) out.push_back(bz_information(p));
  return out;
}

/// sum_j I(p^j) over the bases of m. For a complete set this equals
/// itot(rho) = Tr(rho - 1/n)^2.
inline double itot_via_sum(const DensityOperator& rho, const MubSet& m) {
  double total = 0.0;
  for (double x : information_per_basis(rho, m)) total += x;
  return total;
}

/// sum_j H(p^j): the Shannon counterpart of itot_via_sum. Not unitarily
/// invariant.
inline double shannon_sum(const DensityOperator& rho, const MubSet& m) {
  double total = 0.0;
  for (const auto& p : mub_statistics(rho, m)) total += shannon_entropy(p);
  return total;
}

struct Reconstruction {
  HermitianOperator matrix;
  double trace;
  double min_eigenvalue;  // negative when the input statistics are inconsistent

  bool positive(double tolerance = tol::kOperator) const { return min_eigenvalue >= -tolerance; }
  /// Throws ValidationError when the reconstruction is not a valid state.
  DensityOperator state() const { return DensityOperator(matrix.matrix()); }
};

/// Linear inversion rho = 1/n + sum_j sum_i (p_i^j - 1/n)(P_i^j - 1/n) from
/// the statistics of a complete set. Positivity is reported, not enforced.
inline Reconstruction reconstruct(const std::vector<ProbDist>& probs, const MubSet& m) {
  if (!m.complete())
    throw ValidationError("reconstruct: need a complete set of " + std::to_string(m.dim() + 1) +
                          " bases");
  if (probs.size() != m.size())
    throw ValidationError("reconstruct: expected " + std::to_string(m.size()) +
                          " distributions, got " + std::to_string(probs.size()));
  const std::size_t n = m.dim();
  const auto d = static_cast<Eigen::Index>(n);
  const double inv_n = 1.0 / static_cast<double>(n);
  CMatrix rho = CMatrix::Identity(d, d) * inv_n;
  for (std::size_t j = 0; j < m.size(); ++j) {
    require_same_dim(probs[j].size(), n, "reconstruct");
    for (std::size_t i = 0; i < n; ++i) {
      rho += (probs[j][i] - inv_n) * centered_projector(m.bases()[j], i).matrix();
    }
  }
  HermitianOperator h((rho + rho.adjoint()) / 2.0);
  const double tr = h.matrix().trace().real();
  const double min_eig = detail::hermitian_eigen(h.matrix()).eigenvalues().minCoeff();
  return Reconstruction{std::move(h), tr, min_eig};
}

/// Number of linearly independent centred projectors P - 1/n across the set:
/// the count of state parameters its statistics determine (n^2 - 1 for a
/// complete set).
inline std::size_t independent_parameter_count(const MubSet& m) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  Eigen::MatrixXd design(static_cast<Eigen::Index>(m.size() * m.dim()), 2 * n * n);
  Eigen::Index row = 0;
  for (const auto& b : m.bases()) {
    for (std::size_t i = 0; i < m.dim(); ++i, ++row) {
      const CMatrix c = centered_projector(b, i).matrix();
      for (Eigen::Index k = 0; k < n * n; ++k) {
        design(row, k) = c(k / n, k % n).real();
        design(row, n * n + k) = c(k / n, k % n).imag();
      }
    }
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(design);
  lu.setThreshold(1e-9);
  return static_cast<std::size_t>(lu.rank());
}

}  // namespace qinfo
