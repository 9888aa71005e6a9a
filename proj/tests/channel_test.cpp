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


#include "qinfo/channel.hpp"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

using namespace qinfo;

namespace {

CVector ket(double a, double b) {
  CVector v(2);
  v << a, b;
  return v;
}

const double kRt2 = 1.0 / std::sqrt(2.0);

CqEnsemble zero_plus() {
  return CqEnsemble({"0", "+"}, ProbDist{0.5, 0.5},
                    {DensityOperator::pure(ket(1, 0)), DensityOperator::pure(ket(kRt2, kRt2))});
}

CqEnsemble orthogonal() {
  return CqEnsemble(ProbDist{0.5, 0.5}, {DensityOperator::pure(ket(1, 0)), DensityOperator::pure(ket(0, 1))});
}

double h2(double p) { return -(p * std::log2(p) + (1 - p) * std::log2(1 - p)); }

// Oracle: dense scan over measurement axes in the x-z plane, where both
// Bloch vectors (0,0,1) and (1,0,0) lie. p(up | r) = (1 + r.n)/2.
double zero_plus_scan() {
  double best = 0.0;
  const int steps = 200000;
  for (int s = 0; s <= steps; ++s) {
    const double a = std::numbers::pi * s / steps;
    const double up0 = (1 + std::cos(a)) / 2;
    const double up1 = (1 + std::sin(a)) / 2;
    const double pb = (up0 + up1) / 2;
    double mi = (pb > 0 && pb < 1) ? h2(pb) : 0.0;
    mi -= 0.5 * ((up0 > 0 && up0 < 1) ? h2(up0) : 0.0) + 0.5 * ((up1 > 0 && up1 < 1) ? h2(up1) : 0.0);
    best = std::max(best, mi);
  }
  return best;
}

}  // namespace

TEST(CqEnsemble, Validation) {
  EXPECT_THROW(CqEnsemble(ProbDist{1.0}, {}), ValidationError);
  EXPECT_THROW(CqEnsemble(ProbDist{0.5, 0.5}, {DensityOperator::maximally_mixed(2)}), ValidationError);
  EXPECT_THROW(CqEnsemble(ProbDist{0.5, 0.5},
                          {DensityOperator::maximally_mixed(2), DensityOperator::maximally_mixed(3)}),
               ValidationError);
  const CqEnsemble e = zero_plus();
  EXPECT_EQ(e.letters()[1], "+");
  EXPECT_NEAR(e.average_state().trace().real(), 1.0, 1e-15);
}

TEST(Povm, Validation) {
  EXPECT_THROW(Povm({HermitianOperator::identity(2), HermitianOperator::identity(2)}), ValidationError);
  CMatrix neg(2, 2);
  neg << 1.5, 0, 0, -0.5;
  CMatrix rest(2, 2);
  rest << -0.5, 0, 0, 1.5;
  EXPECT_THROW(Povm({HermitianOperator(neg), HermitianOperator(rest)}), ValidationError);
  const Povm m = random_povm(3, 4, 1);
  CMatrix sum = CMatrix::Zero(3, 3);
  for (const auto& e : m.effects()) sum += e.matrix();
  EXPECT_LT((sum - CMatrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(JointDistribution, Examples) {
  const JointDist z = joint_distribution(orthogonal(), Povm::from_basis(ProjectiveBasis::computational(2)));
  EXPECT_NEAR(z.table()(0, 0), 0.5, 1e-15);
  EXPECT_NEAR(z.table()(0, 1), 0.0, 1e-15);
  EXPECT_NEAR(z.table()(1, 1), 0.5, 1e-15);

  const JointDist x = joint_distribution(orthogonal(), Povm::from_basis(rotate_basis(Axis::kX, 0.0)));
  EXPECT_LT((x.table().array() - 0.25).abs().maxCoeff(), 1e-15);
  EXPECT_NEAR(mutual_information(x), 0.0, 1e-12);

  const JointDist zp = joint_distribution(zero_plus(), Povm::from_basis(ProjectiveBasis::computational(2)));
  EXPECT_NEAR(zp.table()(0, 0), 0.5, 1e-15);
  EXPECT_NEAR(zp.table()(0, 1), 0.0, 1e-15);
  EXPECT_NEAR(zp.table()(1, 0), 0.25, 1e-15);
  EXPECT_NEAR(zp.table()(1, 1), 0.25, 1e-15);

  EXPECT_THROW(joint_distribution(zero_plus(), random_povm(3, 2, 1)), ValidationError);
}

TEST(JointDistribution, MarginalOverOutcomesIsPrior) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const CqEnsemble e = random_ensemble(3, 3, seed);
    const JointDist j = joint_distribution(e, random_povm(3, 4, seed));
    const ProbDist a = j.marginal_a();
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], e.priors()[i], 1e-12);
  }
}

TEST(HolevoChi, Examples) {
  EXPECT_NEAR(holevo_chi(orthogonal()), 1.0, 1e-12);
  EXPECT_NEAR(holevo_chi(zero_plus()), h2((1 + kRt2) / 2), 1e-12);
  EXPECT_NEAR(holevo_chi(zero_plus()), 0.600878, 1e-5);
  const DensityOperator rho = random_density(3, 4);
  EXPECT_NEAR(holevo_chi(CqEnsemble(ProbDist{0.2, 0.3, 0.5}, {rho, rho, rho})), 0.0, 1e-12);
}

TEST(HolevoChi, BoundsMutualInformation) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 2 + seed % 2;
    const CqEnsemble e = random_ensemble(n, 2 + seed % 4, seed + 1);
    const Povm m = random_povm(n, 2 + seed % 5, seed + 2);
    EXPECT_LE(mutual_information(joint_distribution(e, m)), holevo_chi(e) + 1e-9) << "seed " << seed;
  }
}

TEST(Povm, CoarseGrainingNeverHelps) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 2 + seed % 2;
    const CqEnsemble e = random_ensemble(n, 3, seed + 40);
    const Povm m = random_povm(n, 4, seed + 41);
    const double fine = mutual_information(joint_distribution(e, m));
    const double coarse = mutual_information(joint_distribution(e, m.coarse_grained(1, 3)));
    EXPECT_LE(coarse, fine + 1e-12);
  }
}

TEST(SpecificationInformation, Examples) {
  EXPECT_DOUBLE_EQ(specification_information(orthogonal()), 1.0);
  EXPECT_DOUBLE_EQ(specification_information(zero_plus()), 1.0);
  EXPECT_GT(specification_information(zero_plus()), holevo_chi(zero_plus()) + 0.3);
  EXPECT_NEAR(specification_information(orthogonal()), holevo_chi(orthogonal()), 1e-12);
}

TEST(AccessibleInformation, OrthogonalEncoding) {
  const AccessibleInfo a = accessible_information(orthogonal());
  EXPECT_NEAR(a.value, 1.0, 1e-12);
  // The winning measurement is the encoding basis.
  for (const auto& e : a.best.effects()) EXPECT_LT(std::abs(e.matrix()(0, 1)), 1e-9);
}

TEST(AccessibleInformation, IdenticalStatesCarryNothing) {
  const DensityOperator rho = DensityOperator::from_bloch({0.1, 0.2, 0.3});
  EXPECT_NEAR(accessible_information(CqEnsemble(ProbDist{0.5, 0.5}, {rho, rho})).value, 0.0, 1e-12);
}

TEST(AccessibleInformation, ZeroPlusGapBelowChi) {
  const double oracle = zero_plus_scan();
  EXPECT_NEAR(oracle, 0.39912, 1e-3);
  // Closed form for two equiprobable pure states with overlap 1/2.
  EXPECT_NEAR(oracle, 1 - h2((1 - kRt2) / 2), 1e-9);
  const AccessibleInfo a = accessible_information(zero_plus());
  EXPECT_NEAR(a.value, oracle, 1e-9);
  EXPECT_GT(holevo_chi(zero_plus()) - a.value, 0.19);
  EXPECT_NEAR(mutual_information(joint_distribution(zero_plus(), a.best)), a.value, 1e-12);
}

TEST(AccessibleInformation, HigherDimensionSearch) {
  // Three orthogonal qutrit states: the computational basis decodes perfectly.
  std::vector<DensityOperator> states;
  for (Eigen::Index i = 0; i < 3; ++i) {
    CVector v = CVector::Zero(3);
    v(i) = 1.0;
    states.push_back(DensityOperator::pure(v));
  }
  const CqEnsemble e(ProbDist::uniform(3), states);
  const AccessibleInfo a = accessible_information(e);
  EXPECT_NEAR(a.value, std::log2(3.0), 1e-9);

  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const CqEnsemble r = random_ensemble(3, 3, seed + 900);
    SearchConfig cfg;
    cfg.seed = seed;
    cfg.restarts = 4;
    cfg.steps_per_restart = 150;
    const AccessibleInfo got = accessible_information(r, cfg);
    EXPECT_LE(got.value, holevo_chi(r) + 1e-9);
    EXPECT_LE(got.value, specification_information(r) + 1e-9);
    EXPECT_LE(got.value, std::log2(3.0) + 1e-9);
    EXPECT_NEAR(mutual_information(joint_distribution(r, got.best)), got.value, 1e-12);
    // Deterministic per seed.
    EXPECT_EQ(accessible_information(r, cfg).value, got.value);
  }
}

TEST(AccessibleInformation, EmptyBudget) {
  SearchConfig cfg;
  cfg.restarts = 0;
  EXPECT_THROW(accessible_information(random_ensemble(3, 2, 1), cfg), ValidationError);
  SearchConfig grid;
  grid.polar_steps = 0;
  EXPECT_THROW(accessible_information(zero_plus(), grid), ValidationError);
}

TEST(WrongBasisDemo, Examples) {
  const ProbDist fair{0.5, 0.5};
  EXPECT_NEAR(wrong_basis_demo(0.0, fair).mutual, 1.0, 1e-12);
  EXPECT_NEAR(wrong_basis_demo(std::numbers::pi / 2, fair).mutual, 0.0, 1e-12);
  const WrongBasisReport r = wrong_basis_demo(std::numbers::pi / 3, fair);
  EXPECT_NEAR(r.mutual, 0.188722, 1e-5);
  EXPECT_NEAR(r.h_a_given_b, 0.811278, 1e-5);
  EXPECT_THROW(wrong_basis_demo(-0.1, fair), ValidationError);
  EXPECT_THROW(wrong_basis_demo(4.0, fair), ValidationError);
}

TEST(WrongBasisDemo, ClosedFormAndSymmetry) {
  for (int s = 0; s <= 40; ++s) {
    const double theta = std::numbers::pi * s / 40;
    const WrongBasisReport r = wrong_basis_demo(theta, {0.5, 0.5});
    const double c2 = std::cos(theta / 2) * std::cos(theta / 2);
    const double expected = 1 - ((c2 > 0 && c2 < 1) ? h2(c2) : 0.0);
    EXPECT_NEAR(r.mutual, expected, 1e-12);
    EXPECT_NEAR(r.mutual, wrong_basis_demo(std::numbers::pi - theta, {0.5, 0.5}).mutual, 1e-12);
    const WrongBasisReport biased = wrong_basis_demo(theta, {0.8, 0.2});
    EXPECT_GE(biased.h_b, biased.mutual - 1e-12);
  }
}
