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

// Two-qubit yes/no propositions, joint eigenstates of commuting correlation
// observables, and the split of quadratic information between individual
// and joint properties.

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "qinfo/prob.hpp"
#include "qinfo/quantum.hpp"

namespace qinfo {

enum class Pauli { kI, kX, kY, kZ };

inline Pauli parse_pauli(char c) {
  switch (c) {
    case '1': case 'i': case 'I': return Pauli::kI;
    case 'x': case 'X': return Pauli::kX;
    case 'y': case 'Y': return Pauli::kY;
    case 'z': case 'Z': return Pauli::kZ;
    default: throw ValidationError(std::string("unknown Pauli label '") + c + "'");
  }
}

inline char pauli_label(Pauli p) {
  constexpr std::array<char, 4> labels{'1', 'x', 'y', 'z'};
  return labels[static_cast<std::size_t>(p)];
}

inline CMatrix pauli_matrix(Pauli p) {
  switch (p) {
    case Pauli::kI: return CMatrix::Identity(2, 2);
    case Pauli::kX: return sigma_x();
    case Pauli::kY: return sigma_y();
    case Pauli::kZ: return sigma_z();
  }
  throw ValidationError("pauli_matrix: bad label");
}

inline Pauli pauli_of(Axis a) {
  return a == Axis::kX ? Pauli::kX : a == Axis::kY ? Pauli::kY : Pauli::kZ;
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

/// sigma_first (x) sigma_second on two qubits.
inline HermitianOperator pauli_product(Pauli first, Pauli second) {
  return HermitianOperator(kron(pauli_matrix(first), pauli_matrix(second)));
}

/// A yes/no question: an orthogonal projector on the two-qubit space.
class Proposition {
 public:
  Proposition(std::string label, const CMatrix& projector)
      : label_(std::move(label)), projector_(projector) {
    const CMatrix& q = projector_.matrix();
    if ((q * q - q).cwiseAbs().maxCoeff() > tol::kOperator)
      throw ValidationError("Proposition: operator is not idempotent");
  }

  const std::string& label() const { return label_; }
  const HermitianOperator& projector() const { return projector_; }

 private:
  std::string label_;
  HermitianOperator projector_;
};

/// "Is the spin of particle k (0 or 1) up along w?"
inline Proposition spin_up(std::size_t particle, Axis w) {
  if (particle > 1) throw ValidationError("spin_up: particle index must be 0 or 1");
  const CMatrix local = (CMatrix::Identity(2, 2) + pauli_matrix(pauli_of(w))) / 2.0;
  const CMatrix id = CMatrix::Identity(2, 2);
  const char axis = pauli_label(pauli_of(w));
  return Proposition("spin " + std::to_string(particle + 1) + " up along " + axis,
                     particle == 0 ? kron(local, id) : kron(id, local));
}

/// "Are both spins in the same direction along w?" = (1 (x) 1 + s_w (x) s_w)/2.
inline Proposition both_same(Axis w) {
  const Pauli p = pauli_of(w);
  const CMatrix q = (CMatrix::Identity(4, 4) + pauli_product(p, p).matrix()) / 2.0;
  return Proposition(std::string("both same along ") + pauli_label(p), q);
}

/// Two commuting observables with eigenvalues +-1 (O^2 = 1).
class QuestionPair {
 public:
  QuestionPair(HermitianOperator first, HermitianOperator second)
      : first_(std::move(first)), second_(std::move(second)) {
    require_same_dim(first_.dim(), second_.dim(), "QuestionPair");
    const auto n = static_cast<Eigen::Index>(first_.dim());
    for (const auto* o : {&first_, &second_}) {
      if ((o->matrix() * o->matrix() - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > tol::kOperator)
        throw ValidationError("QuestionPair: observable must square to the identity");
    }
    const CMatrix comm = first_.matrix() * second_.matrix() - second_.matrix() * first_.matrix();
    if (comm.norm() >= tol::kOperator)
      throw ValidationError("QuestionPair: observables do not commute");
  }

  const HermitianOperator& first() const { return first_; }
  const HermitianOperator& second() const { return second_; }

 private:
  HermitianOperator first_;
  HermitianOperator second_;
};

struct JointEigenstate {
  CVector vector;  // first non-zero component real positive
  DensityOperator state;
  double residual;  // max over both observables of |O psi - answer psi|
};

/// The unique common eigenvector with the requested eigenvalues. Throws
/// DomainError if the joint eigenspace is not one-dimensional.
inline JointEigenstate joint_eigenstate(const QuestionPair& q, std::array<int, 2> answers) {
  for (int a : answers)
    if (a != 1 && a != -1) throw ValidationError("joint_eigenstate: answers must be +1 or -1");
  const auto n = static_cast<Eigen::Index>(q.first().dim());
  const CMatrix id = CMatrix::Identity(n, n);
  const CMatrix p1 = (id + static_cast<double>(answers[0]) * q.first().matrix()) / 2.0;
  const CMatrix p2 = (id + static_cast<double>(answers[1]) * q.second().matrix()) / 2.0;
  const CMatrix joint = p1 * p2;

  const double rank = joint.trace().real();
  const auto rounded = static_cast<long>(std::lround(rank));
  if (rounded != 1) {
    throw DomainError("joint_eigenstate: joint eigenspace has dimension " +
                      std::to_string(rounded) + ", expected 1");
  }
  const auto es = detail::hermitian_eigen(joint);
  CVector psi = es.eigenvectors().col(n - 1);
  psi.normalize();
  detail::fix_phase(psi);

  const double r1 = (q.first().matrix() * psi - answers[0] * psi).norm();
  const double r2 = (q.second().matrix() * psi - answers[1] * psi).norm();
  return JointEigenstate{psi, DensityOperator::pure(psi), std::max(r1, r2)};
}

/// Quadratic information of the yes/no distribution (Tr(rho Q), 1 - Tr(rho Q)).
/// Ranges over [0, 0.5]; 0.5 exactly when the answer is certain.
inline double proposition_information(const DensityOperator& rho, const Proposition& q) {
  require_same_dim(rho.dim(), q.projector().dim(), "proposition_information");
  const double yes = std::clamp((rho.matrix() * q.projector().matrix()).trace().real(), 0.0, 1.0);
  return bz_information(ProbDist{yes, 1.0 - yes});
}

struct QuestionSet {
  std::vector<Proposition> individual;
  std::vector<Proposition> correlation;
};

/// Six single-particle questions (spin k up along x, y, z) and three
/// correlation questions (both same along x, y, z).
inline QuestionSet canonical_questions() {
  QuestionSet s;
  for (std::size_t k = 0; k < 2; ++k)
    for (Axis w : {Axis::kX, Axis::kY, Axis::kZ}) s.individual.push_back(spin_up(k, w));
  for (Axis w : {Axis::kX, Axis::kY, Axis::kZ}) s.correlation.push_back(both_same(w));
  return s;
}

struct InfoSplit {
  double individual;
  double correlation;
  bool correlations_dominate() const { return correlation > individual; }
};

inline InfoSplit info_split(const DensityOperator& rho, const QuestionSet& questions) {
  require_same_dim(rho.dim(), 4, "info_split");
  InfoSplit s{0.0, 0.0};
  for (const auto& q : questions.individual) s.individual += proposition_information(rho, q);
  for (const auto& q : questions.correlation) s.correlation += proposition_information(rho, q);
  return s;
}

inline InfoSplit info_split(const DensityOperator& rho) {
  return info_split(rho, canonical_questions());
}

/// Reduced state of one qubit (0 or 1) of a two-qubit state.
inline DensityOperator reduced_state(const DensityOperator& rho, std::size_t keep) {
  require_same_dim(rho.dim(), 4, "reduced_state");
  if (keep > 1) throw ValidationError("reduced_state: qubit index must be 0 or 1");
  CMatrix r = CMatrix::Zero(2, 2);
  const CMatrix& m = rho.matrix();
  for (Eigen::Index i = 0; i < 2; ++i)
    for (Eigen::Index j = 0; j < 2; ++j)
      for (Eigen::Index t = 0; t < 2; ++t)
        r(i, j) += keep == 0 ? m(2 * i + t, 2 * j + t) : m(2 * t + i, 2 * t + j);
  return DensityOperator(r);
}

/// Exchanges the two qubits.
inline DensityOperator swap_qubits(const DensityOperator& rho) {
  require_same_dim(rho.dim(), 4, "swap_qubits");
  CMatrix swap = CMatrix::Zero(4, 4);
  swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
  return conjugate(rho, swap);
}

/// (|00> + |11>)/sqrt(2).
inline CVector bell_phi_plus() {
  CVector v = CVector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return v;
}

inline CVector product_vector(const CVector& a, const CVector& b) { return kron(a, b).col(0); }

}  // namespace qinfo
