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

// Classical-quantum channels: encoding letters into states, decoding with a
// measurement, the Holevo quantity, and a search for accessible information.

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qinfo/prob.hpp"
#include "qinfo/quantum.hpp"

namespace qinfo {

/// Letters with prior probabilities, each mapped to a quantum state.
class CqEnsemble {
 public:
  CqEnsemble(std::vector<std::string> letters, ProbDist priors, std::vector<DensityOperator> states)
      : letters_(std::move(letters)), priors_(std::move(priors)), states_(std::move(states)) {
    if (states_.empty()) throw ValidationError("CqEnsemble: no states");
    if (letters_.empty()) {
      for (std::size_t i = 0; i < states_.size(); ++i) letters_.push_back(std::to_string(i));
    }
    if (letters_.size() != states_.size() || priors_.size() != states_.size())
      throw ValidationError("CqEnsemble: letters, priors and states differ in length");
    for (const auto& s : states_) require_same_dim(s.dim(), states_.front().dim(), "CqEnsemble");
    average_ = average();
  }

  CqEnsemble(ProbDist priors, std::vector<DensityOperator> states)
      : CqEnsemble({}, std::move(priors), std::move(states)) {}

  std::size_t dim() const { return states_.front().dim(); }
  std::size_t size() const { return states_.size(); }
  const std::vector<std::string>& letters() const { return letters_; }
  const ProbDist& priors() const { return priors_; }
  const std::vector<DensityOperator>& states() const { return states_; }
  /// rho_bar = sum_a p(a) rho_a.
  const CMatrix& average_state() const { return average_; }

 private:
  CMatrix average() const {
    const auto n = static_cast<Eigen::Index>(dim());
    CMatrix m = CMatrix::Zero(n, n);
    for (std::size_t a = 0; a < states_.size(); ++a) m += priors_[a] * states_[a].matrix();
    DensityOperator check(m);  // validates
    return check.matrix();
  }

  std::vector<std::string> letters_;
  ProbDist priors_;
  std::vector<DensityOperator> states_;
  CMatrix average_;
};

/// Positive operator-valued measure: positive semidefinite effects summing
/// to the identity.
class Povm {
 public:
  explicit Povm(std::vector<HermitianOperator> effects) : effects_(std::move(effects)) {
    if (effects_.empty()) throw ValidationError("Povm: no effects");
    const auto n = static_cast<Eigen::Index>(effects_.front().dim());
    CMatrix sum = CMatrix::Zero(n, n);
    for (const auto& e : effects_) {
      require_same_dim(e.dim(), effects_.front().dim(), "Povm");
      if (detail::hermitian_eigen(e.matrix()).eigenvalues().minCoeff() < -tol::kOperator)
        throw ValidationError("Povm: effect is not positive semidefinite");
      sum += e.matrix();
    }
    if ((sum - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > tol::kOperator)
      throw ValidationError("Povm: effects do not sum to the identity");
  }

  static Povm from_basis(const ProjectiveBasis& b) {
    std::vector<HermitianOperator> effects;
    for (std::size_t i = 0; i < b.size(); ++i) effects.emplace_back(b.projector(i));
    return Povm(std::move(effects));
  }

  std::size_t dim() const { return effects_.front().dim(); }
  std::size_t size() const { return effects_.size(); }
  const std::vector<HermitianOperator>& effects() const { return effects_; }

  /// Merges effects i and j into one outcome (placed at the lower index).
  Povm coarse_grained(std::size_t i, std::size_t j) const {
    if (i >= size() || j >= size() || i == j)
      throw ValidationError("Povm::coarse_grained: bad effect indices");
    if (i > j) std::swap(i, j);
    std::vector<HermitianOperator> out;
    for (std::size_t k = 0; k < size(); ++k) {
      if (k == j) continue;
      if (k == i) {
        out.emplace_back(effects_[i].matrix() + effects_[j].matrix());
      } else {
        out.push_back(effects_[k]);
      }
    }
    return Povm(std::move(out));
  }

 private:
  std::vector<HermitianOperator> effects_;
};

/// p(a, b) = prior(a) Tr(rho_a E_b).
inline JointDist joint_distribution(const CqEnsemble& e, const Povm& m) {
  require_same_dim(e.dim(), m.dim(), "joint_distribution");
  Eigen::MatrixXd t(static_cast<Eigen::Index>(e.size()), static_cast<Eigen::Index>(m.size()));
  for (std::size_t a = 0; a < e.size(); ++a) {
    for (std::size_t b = 0; b < m.size(); ++b) {
      const double tr = (e.states()[a].matrix() * m.effects()[b].matrix()).trace().real();
      t(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = e.priors()[a] * tr;
    }
  }
  return JointDist(std::move(t));
}

/// chi = S(rho_bar) - sum_a p(a) S(rho_a).
inline double holevo_chi(const CqEnsemble& e) {
  double chi = von_neumann_entropy(DensityOperator(e.average_state()));
  for (std::size_t a = 0; a < e.size(); ++a) chi -= e.priors()[a] * von_neumann_entropy(e.states()[a]);
  return std::max(chi, 0.0);
}

/// H(priors): the bits needed to specify which letter was sent.
inline double specification_information(const CqEnsemble& e) { return shannon_entropy(e.priors()); }

struct SearchConfig {
  std::uint64_t seed = 1;
  // Qubit grid: polar x azimuthal cells, then golden-section refinement.
  std::size_t polar_steps = 180;
  std::size_t azimuth_steps = 360;
  std::size_t refine_rounds = 8;
  // Higher dimensions: random-restart hill climbing over projective bases.
  std::size_t restarts = 16;
  std::size_t steps_per_restart = 400;
};

struct AccessibleInfo {
  double value;  // a lower bound on the accessible information
  Povm best;
  std::size_t winning_restart;
};

namespace detail {

// Same as mutual_information(joint_distribution(e, Povm::from_basis(b)))
// without re-validating the effects on every candidate.
inline double projective_information(const CqEnsemble& e, const ProjectiveBasis& b) {
  Eigen::MatrixXd t(static_cast<Eigen::Index>(e.size()), static_cast<Eigen::Index>(b.size()));
  for (std::size_t a = 0; a < e.size(); ++a) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      const CVector v = b.vector(k);
      t(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(k)) =
          e.priors()[a] * v.dot(e.states()[a].matrix() * v).real();
    }
  }
  return mutual_information(JointDist(std::move(t)));
}

inline BlochVector polar_direction(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

// Golden-section maximization of f on [lo, hi].
template <typename F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, int iterations) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - g * (hi - lo);
  double d = lo + g * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < iterations; ++it) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - g * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + g * (hi - lo);
      fd = f(d);
    }
  }
  return fc >= fd ? std::pair{c, fc} : std::pair{d, fd};
}

inline AccessibleInfo qubit_search(const CqEnsemble& e, const SearchConfig& cfg) {
  const double pi = std::numbers::pi;
  const double dtheta = pi / static_cast<double>(cfg.polar_steps);
  const double dphi = 2.0 * pi / static_cast<double>(cfg.azimuth_steps);
  double best_theta = 0.0;
  double best_phi = 0.0;
  double best = -1.0;
  // Ordered scan; strict improvement keeps the first maximizer.
  for (std::size_t i = 0; i <= cfg.polar_steps; ++i) {
    const double theta = dtheta * static_cast<double>(i);
    for (std::size_t j = 0; j < cfg.azimuth_steps; ++j) {
      const double phi = dphi * static_cast<double>(j);
      const double v = projective_information(e, spin_basis(polar_direction(theta, phi)));
      if (v > best) {
        best = v;
        best_theta = theta;
        best_phi = phi;
      }
    }
  }

  // Alternate 1-D golden-section refinements inside the best cell.
  for (std::size_t round = 0; round < cfg.refine_rounds; ++round) {
    auto along_theta = [&](double t) {
      return projective_information(e, spin_basis(polar_direction(t, best_phi)));
    };
    auto [t, vt] = golden_max(along_theta, best_theta - dtheta, best_theta + dtheta, 60);
    if (vt > best) {
      best = vt;
      best_theta = t;
    }
    auto along_phi = [&](double p) {
      return projective_information(e, spin_basis(polar_direction(best_theta, p)));
    };
    auto [p, vp] = golden_max(along_phi, best_phi - dphi, best_phi + dphi, 60);
    if (vp > best) {
      best = vp;
      best_phi = p;
    }
  }
  const ProjectiveBasis b = spin_basis(polar_direction(best_theta, best_phi));
  return AccessibleInfo{best, Povm::from_basis(b), 0};
}

// exp(i eps H) for a random Hermitian H, via its eigendecomposition.
inline CMatrix small_unitary(std::size_t n, double eps, Rng& rng) {
  const auto d = static_cast<Eigen::Index>(n);
  const CMatrix g = ginibre(d, d, rng);
  const auto es = hermitian_eigen(g + g.adjoint());
  CVector phases(d);
  for (Eigen::Index i = 0; i < d; ++i) phases(i) = std::polar(1.0, eps * es.eigenvalues()(i));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

inline AccessibleInfo hill_climb(const CqEnsemble& e, const SearchConfig& cfg) {
  const std::size_t n = e.dim();
  double best = -1.0;
  std::size_t best_restart = 0;
  CMatrix best_u = CMatrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < cfg.restarts; ++r) {
    Rng rng(cfg.seed * 0x9E3779B97F4A7C15ULL + r);
    // Restart 0 starts from the eigenbasis of the average state.
    CMatrix u = r == 0 ? eigenbasis(DensityOperator(e.average_state())).vectors()
                       : random_unitary(n, cfg.seed * 0x9E3779B97F4A7C15ULL + 7919 * (r + 1));
    double value = projective_information(e, ProjectiveBasis(u));
    double step = 0.5;
    for (std::size_t s = 0; s < cfg.steps_per_restart && step > 1e-7; ++s) {
      CMatrix candidate = small_unitary(n, step, rng) * u;
      // Re-orthonormalize to keep drift below the basis tolerance.
      Eigen::HouseholderQR<CMatrix> qr(candidate);
      candidate = qr.householderQ() * CMatrix::Identity(candidate.rows(), candidate.cols());
      const double v = projective_information(e, ProjectiveBasis(candidate));
      if (v > value) {
        value = v;
        u = candidate;
        step *= 1.2;
      } else {
        step *= 0.9;
      }
    }
    if (value > best) {
      best = value;
      best_restart = r;
      best_u = u;
    }
  }
  return AccessibleInfo{best, Povm::from_basis(ProjectiveBasis(best_u)), best_restart};
}

}  // namespace detail

/// Lower bound on the accessible information max_M H(A:B) over projective
/// decoders. Qubits use an exhaustive polar/azimuthal grid plus refinement;
/// higher dimensions use seeded random-restart hill climbing. Deterministic
/// per configuration.
inline AccessibleInfo accessible_information(const CqEnsemble& e, const SearchConfig& cfg = {}) {
  if (e.dim() == 1) {
    return AccessibleInfo{0.0, Povm({HermitianOperator::identity(1)}), 0};
  }
  if (e.dim() == 2) {
    if (cfg.polar_steps == 0 || cfg.azimuth_steps == 0)
      throw ValidationError("accessible_information: empty search grid");
    return detail::qubit_search(e, cfg);
  }
  if (cfg.restarts == 0 || cfg.steps_per_restart == 0)
    throw ValidationError("accessible_information: empty search budget");
  return detail::hill_climb(e, cfg);
}

struct WrongBasisReport {
  double theta;
  ProbDist priors;
  JointDist joint;
  double h_a;
  double h_b;
  double h_a_given_b;
  double mutual;
};

/// Bits encoded in the z basis, read out in the basis tilted from z toward x
/// by Bloch angle theta in [0, pi].
inline WrongBasisReport wrong_basis_demo(double theta, const ProbDist& priors) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi))
    throw ValidationError("wrong_basis_demo: theta must lie in [0, pi]");
  require_same_dim(priors.size(), 2, "wrong_basis_demo");
  CVector zero(2), one(2);
  zero << 1.0, 0.0;
  one << 0.0, 1.0;
  const CqEnsemble e(priors, {DensityOperator::pure(zero), DensityOperator::pure(one)});
  JointDist j = joint_distribution(e, Povm::from_basis(rotate_basis(Axis::kZ, theta)));
  const double ha = shannon_entropy(j.marginal_a());
  const double hb = shannon_entropy(j.marginal_b());
  const double hab = conditional_entropy(j);
  return WrongBasisReport{theta, priors, j, ha, hb, hab, ha - hab};
}

/// Random POVM with the given number of outcomes: E_k = S^{-1/2} G_k S^{-1/2}
/// with G_k = A_k^dagger A_k and S = sum_k G_k.
inline Povm random_povm(std::size_t n, std::size_t outcomes, std::uint64_t seed) {
  if (n == 0 || outcomes == 0) throw ValidationError("random_povm: empty shape");
  Rng rng(seed);
  const auto d = static_cast<Eigen::Index>(n);
  std::vector<CMatrix> g;
  CMatrix s = CMatrix::Zero(d, d);
  for (std::size_t k = 0; k < outcomes; ++k) {
    const CMatrix a = detail::ginibre(d, d, rng);
    g.push_back(a.adjoint() * a);
    s += g.back();
  }
  const auto es = detail::hermitian_eigen(s);
  const Eigen::VectorXd inv_sqrt = es.eigenvalues().array().rsqrt();
  const CMatrix s_inv_half = es.eigenvectors() * inv_sqrt.cast<Complex>().asDiagonal() *
                             es.eigenvectors().adjoint();
  std::vector<HermitianOperator> effects;
  for (const auto& gk : g) {
    const CMatrix e = s_inv_half * gk * s_inv_half;
    effects.emplace_back((e + e.adjoint()) / 2.0);
  }
  return Povm(std::move(effects));
}

/// Random ensemble of `letters` states in dimension n with random priors;
/// state ranks cycle through 1..n.
inline CqEnsemble random_ensemble(std::size_t n, std::size_t letters, std::uint64_t seed) {
  if (letters == 0) throw ValidationError("random_ensemble: need at least one letter");
  std::vector<DensityOperator> states;
  for (std::size_t a = 0; a < letters; ++a)
    states.push_back(random_density(n, seed * 1000003ULL + a, 1 + a % n));
  return CqEnsemble(random_distribution(letters, seed ^ 0xA5A5A5A5ULL), std::move(states));
}

}  // namespace qinfo
