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

// Density operators, projective measurements, spectral functionals and the
// Hilbert-Schmidt geometry of Hermitian operators.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qinfo/common.hpp"
#include "qinfo/prob.hpp"

namespace qinfo {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using BlochVector = std::array<double, 3>;

namespace detail {

inline double hermitian_defect(const CMatrix& m) { return (m - m.adjoint()).cwiseAbs().maxCoeff(); }

// Eigen-decomposition of the Hermitian part (M + M^dagger)/2.
inline Eigen::SelfAdjointEigenSolver<CMatrix> hermitian_eigen(const CMatrix& m) {
  const CMatrix sym = (m + m.adjoint()) / 2.0;
  return Eigen::SelfAdjointEigenSolver<CMatrix>(sym);
}

inline void require_square(const CMatrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols())
    throw ValidationError(std::string(what) + ": matrix must be square and non-empty");
  if (!m.allFinite()) throw ValidationError(std::string(what) + ": non-finite entry");
}

// Make the first component with non-negligible magnitude real and positive.
inline void fix_phase(CVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-12) {
      v *= std::conj(v(i)) / std::abs(v(i));
      v(i) = std::abs(v(i));
      return;
    }
  }
}

}  // namespace detail

/// A Hermitian n x n operator; stored symmetrized.
class HermitianOperator {
 public:
  explicit HermitianOperator(const CMatrix& m) {
    detail::require_square(m, "HermitianOperator");
    if (detail::hermitian_defect(m) > tol::kOperator)
      throw ValidationError("HermitianOperator: matrix is not Hermitian");
    matrix_ = (m + m.adjoint()) / 2.0;
  }

  static HermitianOperator identity(std::size_t n) {
    const auto d = static_cast<Eigen::Index>(n);
    return HermitianOperator(CMatrix::Identity(d, d));
  }

  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const CMatrix& matrix() const { return matrix_; }

 private:
  CMatrix matrix_;
};

/// Hermitian, unit-trace, positive semidefinite operator.
class DensityOperator {
 public:
  explicit DensityOperator(const CMatrix& m) {
    detail::require_square(m, "DensityOperator");
    if (detail::hermitian_defect(m) > tol::kOperator)
      throw ValidationError("DensityOperator: matrix is not Hermitian");
    matrix_ = (m + m.adjoint()) / 2.0;
    const double tr = matrix_.trace().real();
    if (std::abs(tr - 1.0) > tol::kOperator)
      throw ValidationError("DensityOperator: trace " + std::to_string(tr) + " is not 1");
    const double min_eig = detail::hermitian_eigen(matrix_).eigenvalues().minCoeff();
    if (min_eig < -tol::kOperator)
      throw ValidationError("DensityOperator: negative eigenvalue " + std::to_string(min_eig));
  }

  static DensityOperator maximally_mixed(std::size_t n) {
    const auto d = static_cast<Eigen::Index>(n);
    return DensityOperator(CMatrix::Identity(d, d) / static_cast<double>(n));
  }

  /// |psi><psi| for a (not necessarily normalized) non-zero vector.
  static DensityOperator pure(const CVector& psi) {
    const double norm = psi.norm();
    if (!(norm > 0.0)) throw ValidationError("DensityOperator::pure: zero vector");
    const CVector u = psi / norm;
    return DensityOperator(u * u.adjoint());
  }

  /// Qubit state (1 + r.sigma)/2; requires |r| <= 1 (+1e-9).
  static DensityOperator from_bloch(const BlochVector& r) {
    const double len = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
    if (!std::isfinite(len) || len > 1.0 + tol::kOperator)
      throw ValidationError("DensityOperator::from_bloch: |r| exceeds 1");
    CMatrix m(2, 2);
    m << Complex(1.0 + r[2], 0.0), Complex(r[0], -r[1]), Complex(r[0], r[1]),
        Complex(1.0 - r[2], 0.0);
    return DensityOperator(m / 2.0);
  }

  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const CMatrix& matrix() const { return matrix_; }
  HermitianOperator as_hermitian() const { return HermitianOperator(matrix_); }

 private:
  CMatrix matrix_;
};

/// n orthonormal vectors, stored as the columns of a unitary matrix.
class ProjectiveBasis {
 public:
  explicit ProjectiveBasis(const CMatrix& vectors) : vectors_(vectors) {
    detail::require_square(vectors_, "ProjectiveBasis");
    const auto n = vectors_.rows();
    const double defect = (vectors_.adjoint() * vectors_ - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
    if (defect > tol::kOperator)
      throw ValidationError("ProjectiveBasis: vectors are not orthonormal");
  }

  static ProjectiveBasis computational(std::size_t n) {
    const auto d = static_cast<Eigen::Index>(n);
    return ProjectiveBasis(CMatrix::Identity(d, d));
  }

  std::size_t dim() const { return static_cast<std::size_t>(vectors_.rows()); }
  std::size_t size() const { return static_cast<std::size_t>(vectors_.cols()); }
  CVector vector(std::size_t i) const { return vectors_.col(static_cast<Eigen::Index>(i)); }
  const CMatrix& vectors() const { return vectors_; }

  /// Rank-one projector P_i = |e_i><e_i|.
  CMatrix projector(std::size_t i) const {
    const CVector v = vector(i);
    return v * v.adjoint();
  }

 private:
  CMatrix vectors_;
};

/// Eigenvalues of a density operator as a distribution, non-increasing.
struct Spectrum {
  ProbDist eigenvalues;
};

inline void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw ValidationError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                          " vs " + std::to_string(b) + ")");
  }
}

/// p_i = Tr(rho P_i).
inline ProbDist born_probabilities(const DensityOperator& rho, const ProjectiveBasis& b) {
  require_same_dim(rho.dim(), b.dim(), "born_probabilities");
  std::vector<double> p(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    const CVector v = b.vector(i);
    p[i] = v.dot(rho.matrix() * v).real();
  }
  return ProbDist(std::move(p));
}

/// Non-selective Lueders update rho' = sum_i P_i rho P_i.
inline DensityOperator luders_update(const DensityOperator& rho, const ProjectiveBasis& b) {
  require_same_dim(rho.dim(), b.dim(), "luders_update");
  const auto n = static_cast<Eigen::Index>(rho.dim());
  CMatrix out = CMatrix::Zero(n, n);
  for (std::size_t i = 0; i < b.size(); ++i) {
    const CMatrix p = b.projector(i);
    out += p * rho.matrix() * p;
  }
  return DensityOperator(out);
}

/// Spectrum of rho, descending. Eigenvalues in [-1e-9, 0) clamp to zero and
/// the result is renormalized.
inline Spectrum spectrum(const DensityOperator& rho) {
  const auto solver = detail::hermitian_eigen(rho.matrix());
  const Eigen::VectorXd& ev = solver.eigenvalues();
  std::vector<double> lam(static_cast<std::size_t>(ev.size()));
  double total = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    const double x = std::max(ev(ev.size() - 1 - i), 0.0);
    lam[static_cast<std::size_t>(i)] = x;
    total += x;
  }
  for (double& x : lam) x /= total;
  return Spectrum{ProbDist(std::move(lam))};
}

/// Orthonormal eigenvectors of rho ordered to match spectrum(rho).
inline ProjectiveBasis eigenbasis(const DensityOperator& rho) {
  const auto solver = detail::hermitian_eigen(rho.matrix());
  return ProjectiveBasis(solver.eigenvectors().rowwise().reverse());
}

/// S(rho) = -Tr rho log2 rho = H(spectrum).
inline double von_neumann_entropy(const DensityOperator& rho) {
  return shannon_entropy(spectrum(rho).eigenvalues);
}

/// Tr(rho^2).
inline double purity(const DensityOperator& rho) {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return rho.matrix().squaredNorm();
}

/// Tr(rho - 1/n)^2 = Tr(rho^2) - 1/n.
inline double itot(const DensityOperator& rho) {
  return purity(rho) - 1.0 / static_cast<double>(rho.dim());
}

inline bool is_pure(const DensityOperator& rho) { return purity(rho) > 1.0 - 1e-9; }

/// Hilbert-Schmidt inner product Tr(AB); the imaginary residue is dropped.
inline double hs_inner(const HermitianOperator& a, const HermitianOperator& b) {
  require_same_dim(a.dim(), b.dim(), "hs_inner");
  return (a.matrix() * b.matrix()).trace().real();
}

/// sqrt(Tr((A - B)^2)).
inline double hs_distance(const HermitianOperator& a, const HermitianOperator& b) {
  require_same_dim(a.dim(), b.dim(), "hs_distance");
  const CMatrix d = a.matrix() - b.matrix();
  return std::sqrt(std::max((d * d).trace().real(), 0.0));
}

inline double hs_distance(const DensityOperator& a, const DensityOperator& b) {
  return hs_distance(a.as_hermitian(), b.as_hermitian());
}

/// Conjugation U rho U^dagger.
inline DensityOperator conjugate(const DensityOperator& rho, const CMatrix& u) {
  require_same_dim(rho.dim(), static_cast<std::size_t>(u.rows()), "conjugate");
  return DensityOperator(u * rho.matrix() * u.adjoint());
}

// --- Seeded generators -----------------------------------------------------

namespace detail {

inline CMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  CMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(i, j) = Complex(re, im);
    }
  return g;
}

}  // namespace detail

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
/// of R's diagonal absorbed into Q.
inline CMatrix random_unitary(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw ValidationError("random_unitary: n must be positive");
  Rng rng(seed);
  const auto d = static_cast<Eigen::Index>(n);
  const CMatrix g = detail::ginibre(d, d, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(d, d);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < d; ++i) {
    const double mag = std::abs(r(i, i));
    if (mag > 0.0) q.col(i) *= r(i, i) / mag;
  }
  return q;
}

/// Random density operator of the given rank: G G^dagger / Tr for an n x rank
/// complex Gaussian G.
inline DensityOperator random_density(std::size_t n, std::uint64_t seed, std::size_t rank) {
  if (n == 0) throw ValidationError("random_density: n must be positive");
  if (rank == 0 || rank > n) throw ValidationError("random_density: rank must be in [1, n]");
  Rng rng(seed);
  const CMatrix g = detail::ginibre(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(rank), rng);
  const CMatrix m = g * g.adjoint();
  return DensityOperator(m / m.trace().real());
}

inline DensityOperator random_density(std::size_t n, std::uint64_t seed) {
  return random_density(n, seed, n);
}

inline ProjectiveBasis random_basis(std::size_t n, std::uint64_t seed) {
  return ProjectiveBasis(random_unitary(n, seed));
}

/// Pauli matrices.
inline CMatrix sigma_x() {
  CMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}
inline CMatrix sigma_y() {
  CMatrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}
inline CMatrix sigma_z() {
  CMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

/// Eigenbasis of the spin observable d.sigma along a Bloch direction: the +1
/// ("up") eigenvector first. Each vector's first non-zero component is real
/// and positive.
inline ProjectiveBasis spin_basis(const BlochVector& direction) {
  const double len = std::sqrt(direction[0] * direction[0] + direction[1] * direction[1] +
                               direction[2] * direction[2]);
  if (!(len > 0.0) || !std::isfinite(len)) throw ValidationError("spin_basis: zero direction");
  const double x = direction[0] / len;
  const double y = direction[1] / len;
  const double z = direction[2] / len;
  // Closed form: up = (cos(t/2), e^{i phi} sin(t/2)), down = (sin(t/2), -e^{i phi} cos(t/2)).
  const double theta = std::acos(std::clamp(z, -1.0, 1.0));
  const double phi = std::atan2(y, x);
  const Complex phase = std::polar(1.0, phi);
  CVector up(2), down(2);
  up << std::cos(theta / 2.0), phase * std::sin(theta / 2.0);
  down << std::sin(theta / 2.0), -phase * std::cos(theta / 2.0);
  detail::fix_phase(up);
  detail::fix_phase(down);
  CMatrix v(2, 2);
  v.col(0) = up;
  v.col(1) = down;
  return ProjectiveBasis(v);
}

enum class Axis { kX, kY, kZ };

inline BlochVector unit_axis(Axis a) {
  switch (a) {
    case Axis::kX: return {1.0, 0.0, 0.0};
    case Axis::kY: return {0.0, 1.0, 0.0};
    case Axis::kZ: return {0.0, 0.0, 1.0};
  }
  throw ValidationError("unit_axis: bad axis");
}

/// Qubit measurement basis along cos(angle) a + sin(angle) a', where a' is
/// the next axis in the cyclic order x -> y -> z -> x. rotate_basis(kZ, t)
/// tilts the measurement from z toward x by Bloch angle t.
inline ProjectiveBasis rotate_basis(Axis axis, double angle) {
  if (!std::isfinite(angle)) throw ValidationError("rotate_basis: non-finite angle");
  const Axis next = axis == Axis::kX ? Axis::kY : axis == Axis::kY ? Axis::kZ : Axis::kX;
  const BlochVector a = unit_axis(axis);
  const BlochVector b = unit_axis(next);
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return spin_basis({c * a[0] + s * b[0], c * a[1] + s * b[1], c * a[2] + s * b[2]});
}

/// Bloch vector of a qubit state, r_k = Tr(rho sigma_k).
inline BlochVector bloch_vector(const DensityOperator& rho) {
  require_same_dim(rho.dim(), 2, "bloch_vector");
  return {(rho.matrix() * sigma_x()).trace().real(), (rho.matrix() * sigma_y()).trace().real(),
          (rho.matrix() * sigma_z()).trace().real()};
}

}  // namespace qinfo
