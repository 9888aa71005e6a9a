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

// End-to-end acceptance checks. Each criterion is a fixed, seeded,
// desk-scale experiment with its tolerance pinned here. Shared by the
// acceptance test binary and the `selftest` CLI subcommand.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qinfo/channel.hpp"
#include "qinfo/coding.hpp"
#include "qinfo/entangle.hpp"
#include "qinfo/mub.hpp"
#include "qinfo/prob.hpp"
#include "qinfo/quantum.hpp"

namespace qinfo::acceptance {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
};

namespace detail {

inline std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// Tr((rho - 1/n)^2) straight from the matrix, independent of purity().
inline double centered_square_norm(const DensityOperator& rho) {
  const auto n = static_cast<Eigen::Index>(rho.dim());
  const CMatrix c = rho.matrix() - CMatrix::Identity(n, n) / static_cast<double>(n);
  return (c * c).trace().real();
}

}  // namespace detail

inline CriterionResult total_information_identity() {
  double worst = 0.0;
  for (std::size_t n : {2u, 3u, 5u, 7u}) {
    const MubSet m = build_mubs(n);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const DensityOperator rho = random_density(n, 1000 * n + seed);
      worst = std::max(worst, std::abs(itot_via_sum(rho, m) - detail::centered_square_norm(rho)));
    }
  }
  return {1, "total information: sum_j I(p^j) = Tr(rho - 1/n)^2", worst < 1e-9,
          "max |diff| = " + detail::fmt(worst) + " (< 1e-9), 400 states, dims 2,3,5,7"};
}

inline CriterionResult reconstruction_round_trip() {
  double worst = 0.0;
  for (std::size_t n : {2u, 3u, 5u}) {
    const MubSet m = build_mubs(n);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const DensityOperator rho = random_density(n, 2000 * n + seed);
      const Reconstruction r = reconstruct(mub_statistics(rho, m), m);
      worst = std::max(worst, hs_distance(r.matrix, rho.as_hermitian()));
    }
  }
  return {2, "linear reconstruction round trip", worst < 1e-9,
          "max hs_distance = " + detail::fmt(worst) + " (< 1e-9), 150 states, dims 2,3,5"};
}

inline CriterionResult mub_correctness() {
  bool ok = true;
  double worst_unbiased = 0.0;
  double worst_orth = 0.0;
  for (std::size_t n : {2u, 3u, 5u, 7u}) {
    const MubSet m = build_mubs(n);
    const auto u = verify_unbiased(m, 1e-12);
    const auto o = hyperplane_orthogonality(m, 1e-12);
    ok = ok && m.complete() && u.passed && o.passed;
    worst_unbiased = std::max(worst_unbiased, u.max_deviation);
    worst_orth = std::max(worst_orth, o.max_overlap);
  }
  return {3, "MUB construction unbiased and hyperplane-orthogonal", ok,
          "max |Tr(PQ)-1/n| = " + detail::fmt(worst_unbiased) + ", max |Tr(PbarQbar)| = " +
              detail::fmt(worst_orth) + " (< 1e-12), n = 2,3,5,7"};
}

inline CriterionResult grouping_axiom() {
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const std::size_t n = 2 + seed % 7;
    worst = std::max(worst, std::abs(faddeev_residual(random_distribution(n, 3000 + seed))));
  }
  const double lhs = shannon_entropy(ProbDist{1.0 / 2, 1.0 / 3, 1.0 / 6});
  const double rhs = shannon_entropy(ProbDist{0.5, 0.5}) +
                     0.5 * shannon_entropy(ProbDist{2.0 / 3, 1.0 / 3});
  const bool fig = std::abs(lhs - 1.459148) < 1e-5 && std::abs(rhs - 1.459148) < 1e-5;
  return {4, "grouping axiom residual", worst < 1e-12 && fig,
          "max |residual| = " + detail::fmt(worst) + " (< 1e-12) over 1000 draws; H(1/2,1/3,1/6) = " +
              detail::fmt(lhs) + ", H(1/2,1/2) + H(2/3,1/3)/2 = " + detail::fmt(rhs)};
}

inline CriterionResult holevo_bound() {
  double worst_excess = -1.0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 2 + seed % 2;
    const CqEnsemble e = random_ensemble(n, 2 + seed % 3, 4000 + seed);
    const Povm m = random_povm(n, 2 + seed % 4, 5000 + seed);
    worst_excess = std::max(worst_excess, mutual_information(joint_distribution(e, m)) - holevo_chi(e));
  }
  CVector zero(2), plus(2);
  zero << 1.0, 0.0;
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const CqEnsemble e(ProbDist{0.5, 0.5}, {DensityOperator::pure(zero), DensityOperator::pure(plus)});
  const double chi = holevo_chi(e);
  const double acc = accessible_information(e).value;
  const bool ok = worst_excess <= 1e-9 && std::abs(chi - 0.600878) < 1e-4 &&
                  std::abs(acc - 0.39912) < 1e-3 && chi - acc > 0.19;
  return {5, "Holevo bound and accessible-information gap", ok,
          "max(MI - chi) = " + detail::fmt(worst_excess) + " (<= 1e-9); {|0>,|+>}: chi = " +
              detail::fmt(chi) + ", accessible = " + detail::fmt(acc) + ", gap = " + detail::fmt(chi - acc)};
}

inline CriterionResult measurement_majorization() {
  bool ok = true;
  int failures = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 2 + seed % 3;
    const DensityOperator rho = random_density(n, 6000 + seed, 1 + seed % n);
    const ProjectiveBasis b = random_basis(n, 7000 + seed);
    const ProbDist lam = spectrum(rho).eigenvalues;
    const ProbDist after = spectrum(luders_update(rho, b)).eigenvalues;
    const ProbDist born = born_probabilities(rho, b);
    const bool here = majorizes(lam, after) &&
                      shannon_entropy(born) >= von_neumann_entropy(rho) - 1e-9 &&
                      bz_information(born) <= itot(rho) + 1e-9;
    if (!here) ++failures;
    ok = ok && here;
  }
  return {6, "post-measurement spectra majorized; H(born) >= S, I(born) <= I_tot", ok,
          std::to_string(failures) + " failures in 200 (rho, basis) pairs, dims 2-4"};
}

inline CriterionResult schur_monotonicity() {
  double worst_h = 0.0;
  double worst_i = 0.0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const std::size_t n = 2 + seed % 7;
    const ProbDist p = random_distribution(n, 8000 + seed);
    const ProbDist q = apply_doubly_stochastic(random_doubly_stochastic(n, 9000 + seed), p);
    worst_h = std::max(worst_h, shannon_entropy(p) - shannon_entropy(q));
    worst_i = std::max(worst_i, bz_information(q) - bz_information(p));
  }
  return {7, "Schur concavity of H and convexity of I", worst_h <= 1e-12 && worst_i <= 1e-12,
          "max H decrease = " + detail::fmt(worst_h) + ", max I increase = " + detail::fmt(worst_i) +
              " (<= 1e-12), 500 mixings"};
}

inline CriterionResult coding_bounds() {
  bool ok = true;
  double worst_gap = 0.0;  // max of (rate - H) * k, must stay < 1
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ProbDist p = random_distribution(2 + seed % 3, 10000 + seed);
    const double h = shannon_entropy(p);
    for (std::size_t k : {1u, 2u, 4u}) {
      const double rate = block_question_rate(p, k);
      ok = ok && rate >= h - 1e-12 && rate < h + 1.0 / static_cast<double>(k);
      worst_gap = std::max(worst_gap, (rate - h) * static_cast<double>(k));
    }
  }
  const auto ts = typical_set(ProbDist{0.8, 0.2}, 10, 0.1);
  ok = ok && ts.count == 45;
  return {8, "block question rate within [H, H + 1/k); typical set count", ok,
          "max k(rate - H) = " + detail::fmt(worst_gap) + " (< 1); typical_set((0.8,0.2),10,0.1).count = " +
              std::to_string(ts.count)};
}

inline CriterionResult shannon_non_invariance() {
  // |0><0| versus the pure state along (1,1,1)/sqrt(3): related by the
  // unitary whose first column is that state.
  const MubSet m = build_mubs(2);
  const DensityOperator rho = DensityOperator::from_bloch({0.0, 0.0, 1.0});
  const CMatrix u = spin_basis({1.0, 1.0, 1.0}).vectors();
  const DensityOperator rotated = conjugate(rho, u);
  const double dh = std::abs(shannon_sum(rotated, m) - shannon_sum(rho, m));
  const double di = std::abs(itot_via_sum(rotated, m) - itot_via_sum(rho, m));
  return {9, "Shannon MUB sum is not unitarily invariant", dh > 0.01 && di < 1e-9,
          "Shannon sum change = " + detail::fmt(dh) + " (> 0.01), I_tot change = " + detail::fmt(di) +
              " (< 1e-9)"};
}

inline CriterionResult appendix_examples() {
  const QuestionPair xx_yy(pauli_product(Pauli::kX, Pauli::kX), pauli_product(Pauli::kY, Pauli::kY));
  const JointEigenstate bell = joint_eigenstate(xx_yy, {1, -1});
  const double fidelity = std::norm(bell_phi_plus().dot(bell.vector));
  const InfoSplit sb = info_split(bell.state);

  CVector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const InfoSplit sp = info_split(DensityOperator::pure(product_vector(plus, plus)));

  const bool ok = fidelity > 1 - 1e-9 && std::abs(sb.individual) < 1e-9 &&
                  std::abs(sb.correlation - 1.5) < 1e-9 && std::abs(sp.individual - 1.0) < 1e-9 &&
                  std::abs(sp.correlation - 0.5) < 1e-9;
  return {10, "two-qubit joint eigenstates and information split", ok,
          "Bell fidelity = " + detail::fmt(fidelity) + "; Bell split (" + detail::fmt(sb.individual) + ", " +
              detail::fmt(sb.correlation) + "); |++> split (" + detail::fmt(sp.individual) + ", " +
              detail::fmt(sp.correlation) + ")"};
}

inline CriterionResult pure_state_totals() {
  double worst_itot = 0.0;
  double worst_s = 0.0;
  for (std::size_t n : {2u, 3u, 5u, 7u}) {
    const DensityOperator rho = random_density(n, 11000 + n, 1);
    worst_itot = std::max(worst_itot, std::abs(itot(rho) - (1.0 - 1.0 / static_cast<double>(n))));
    worst_s = std::max(worst_s, von_neumann_entropy(rho));
  }
  return {11, "pure states: I_tot = 1 - 1/n, S = 0", worst_itot < 1e-12 && worst_s < 1e-9,
          "max |I_tot - (1-1/n)| = " + detail::fmt(worst_itot) + " (< 1e-12), max S = " +
              detail::fmt(worst_s) + " (< 1e-9)"};
}

/// Every criterion, in order. A criterion that throws is reported as failed.
inline std::vector<CriterionResult> run_all() {
  const std::vector<std::pair<int, std::function<CriterionResult()>>> criteria = {
      {1, total_information_identity}, {2, reconstruction_round_trip}, {3, mub_correctness},
      {4, grouping_axiom},             {5, holevo_bound},              {6, measurement_majorization},
      {7, schur_monotonicity},         {8, coding_bounds},             {9, shannon_non_invariance},
      {10, appendix_examples},         {11, pure_state_totals}};
  std::vector<CriterionResult> out;
  for (const auto& [id, run] : criteria) {
    try {
      out.push_back(run());
    } catch (const std::exception& e) {
      out.push_back({id, "criterion " + std::to_string(id), false, std::string("threw: ") + e.what()});
    }
  }
  return out;
}

inline std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << " -- " << r.detail;
  return os.str();
}

}  // namespace qinfo::acceptance
