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


#include "qinfo/quantum.hpp"

#include <cmath>

#include "gtest/gtest.h"

using namespace qinfo;

namespace {

CVector ket(std::initializer_list<Complex> xs) {
  CVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

const double kRt2 = 1.0 / std::sqrt(2.0);

// 1/2 (|0><0| + |+><+|) = [[3/4, 1/4], [1/4, 1/4]].
DensityOperator zero_plus_mixture() {
  CMatrix m(2, 2);
  m << 0.75, 0.25, 0.25, 0.25;
  return DensityOperator(m);
}

}  // namespace

TEST(DensityOperator, Validation) {
  CMatrix bad(2, 2);
  bad << 0.5, 0.1, 0.0, 0.5;
  EXPECT_THROW(DensityOperator{bad}, ValidationError);  // not Hermitian
  bad << 0.6, 0.0, 0.0, 0.6;
  EXPECT_THROW(DensityOperator{bad}, ValidationError);  // trace
  bad << 1.2, 0.0, 0.0, -0.2;
  EXPECT_THROW(DensityOperator{bad}, ValidationError);  // negative eigenvalue
  EXPECT_THROW(DensityOperator::from_bloch({1.0, 1.0, 0.0}), ValidationError);
  EXPECT_NO_THROW(DensityOperator::from_bloch({0.6, 0.0, 0.8}));
}

TEST(BornProbabilities, Examples) {
  const DensityOperator zero = DensityOperator::pure(ket({1, 0}));
  const ProbDist z = born_probabilities(zero, ProjectiveBasis::computational(2));
  EXPECT_NEAR(z[0], 1.0, 1e-15);
  EXPECT_NEAR(z[1], 0.0, 1e-15);
  const ProbDist x = born_probabilities(zero, rotate_basis(Axis::kX, 0.0));
  EXPECT_NEAR(x[0], 0.5, 1e-15);
  EXPECT_NEAR(x[1], 0.5, 1e-15);
  const ProbDist r = born_probabilities(DensityOperator::from_bloch({0.3, 0.0, 0.4}),
                                        ProjectiveBasis::computational(2));
  EXPECT_NEAR(r[0], 0.7, 1e-15);
  EXPECT_NEAR(r[1], 0.3, 1e-15);
  EXPECT_THROW(born_probabilities(zero, ProjectiveBasis::computational(3)), ValidationError);
}

TEST(BornProbabilities, MajorizedBySpectrumAndEntropyBounds) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 2 + seed % 4;
    const DensityOperator rho = random_density(n, seed, 1 + seed % n);
    const ProjectiveBasis b = random_basis(n, seed + 1000);
    const ProbDist p = born_probabilities(rho, b);
    EXPECT_TRUE(majorizes(spectrum(rho).eigenvalues, p));
    EXPECT_GE(shannon_entropy(p), von_neumann_entropy(rho) - 1e-9);
    EXPECT_LE(bz_information(p), itot(rho) + 1e-9);
  }
}

TEST(BornProbabilities, EigenbasisGivesSpectrum) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const DensityOperator rho = random_density(2 + seed % 4, seed);
    const ProbDist p = born_probabilities(rho, eigenbasis(rho));
    const ProbDist lam = spectrum(rho).eigenvalues;
    for (std::size_t i = 0; i < p.size(); ++i) EXPECT_NEAR(p[i], lam[i], 1e-9);
  }
}

TEST(LudersUpdate, EigenbasisLeavesStateUnchanged) {
  const DensityOperator rho = random_density(3, 5);
  const DensityOperator after = luders_update(rho, eigenbasis(rho));
  EXPECT_LT((after.matrix() - rho.matrix()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(LudersUpdate, ConjugateBasisMixesCompletely) {
  CMatrix m(2, 2);
  m << 0.7, 0.0, 0.0, 0.3;
  const DensityOperator after = luders_update(DensityOperator(m), rotate_basis(Axis::kX, 0.0));
  EXPECT_LT((after.matrix() - CMatrix::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_TRUE(majorizes({0.7, 0.3}, spectrum(after).eigenvalues));
  EXPECT_NEAR(spectrum(after).eigenvalues[0], 0.5, 1e-15);
}

TEST(LudersUpdate, MajorizationAndIdempotence) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 2 + seed % 3;
    const DensityOperator rho = random_density(n, seed + 300, 1 + seed % n);
    const ProjectiveBasis b = random_basis(n, seed + 700);
    const DensityOperator once = luders_update(rho, b);
    EXPECT_TRUE(majorizes(spectrum(rho).eigenvalues, spectrum(once).eigenvalues));
    const DensityOperator twice = luders_update(once, b);
    EXPECT_LT((twice.matrix() - once.matrix()).cwiseAbs().maxCoeff(), 1e-12);
    // Diagonal in the measured basis.
    const CMatrix in_basis = b.vectors().adjoint() * once.matrix() * b.vectors();
    EXPECT_LT((in_basis - CMatrix(in_basis.diagonal().asDiagonal())).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Spectrum, Examples) {
  const ProbDist mixed = spectrum(DensityOperator::maximally_mixed(4)).eigenvalues;
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(mixed[i], 0.25, 1e-15);
  const ProbDist pure = spectrum(DensityOperator::pure(ket({0.6, Complex(0, 0.8), 0}))).eigenvalues;
  EXPECT_NEAR(pure[0], 1.0, 1e-12);
  EXPECT_NEAR(pure[1], 0.0, 1e-12);
  // Closed form for a 2x2 Hermitian matrix: (tr +- sqrt((a-d)^2 + 4|b|^2)) / 2.
  const double disc = std::sqrt(0.5 * 0.5 + 4 * 0.25 * 0.25);
  const ProbDist lam = spectrum(zero_plus_mixture()).eigenvalues;
  EXPECT_NEAR(lam[0], (1 + disc) / 2, 1e-12);
  EXPECT_NEAR(lam[1], (1 - disc) / 2, 1e-12);
  EXPECT_NEAR(lam[0], 0.853553, 1e-6);
  EXPECT_NEAR(lam[1], 0.146447, 1e-6);
}

TEST(VonNeumannEntropy, Examples) {
  EXPECT_NEAR(von_neumann_entropy(DensityOperator::pure(ket({1, 1}))), 0.0, 1e-12);
  EXPECT_NEAR(von_neumann_entropy(DensityOperator::maximally_mixed(2)), 1.0, 1e-15);
  EXPECT_NEAR(von_neumann_entropy(zero_plus_mixture()), 0.600878, 1e-5);
}

TEST(PurityAndItot, Examples) {
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto mixed = DensityOperator::maximally_mixed(n);
    EXPECT_NEAR(purity(mixed), 1.0 / static_cast<double>(n), 1e-15);
    EXPECT_NEAR(itot(mixed), 0.0, 1e-15);
    const auto pure = random_density(n, 3 * n, 1);
    EXPECT_NEAR(itot(pure), 1.0 - 1.0 / static_cast<double>(n), 1e-12);
    EXPECT_TRUE(is_pure(pure));
  }
  EXPECT_NEAR(itot(DensityOperator::from_bloch({0.3, 0.0, 0.4})), 0.125, 1e-15);
}

TEST(UnitaryInvariance, ItotEntropyPurity) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 2 + seed % 4;
    const DensityOperator rho = random_density(n, seed, 1 + seed % n);
    const DensityOperator moved = conjugate(rho, random_unitary(n, seed + 10000));
    EXPECT_LT(std::abs(itot(moved) - itot(rho)), 1e-9);
    EXPECT_LT(std::abs(purity(moved) - purity(rho)), 1e-9);
    EXPECT_LT(std::abs(von_neumann_entropy(moved) - von_neumann_entropy(rho)), 1e-9);
  }
}

TEST(HilbertSchmidt, Examples) {
  const auto id = HermitianOperator::identity(3);
  EXPECT_DOUBLE_EQ(hs_inner(id, id), 3.0);
  const HermitianOperator p(rotate_basis(Axis::kZ, 0.0).projector(0));
  const HermitianOperator q(rotate_basis(Axis::kX, 0.0).projector(1));
  EXPECT_NEAR(hs_inner(p, q), 0.5, 1e-15);
  const DensityOperator rho = DensityOperator::from_bloch({0.3, 0.0, 0.4});
  const double d = hs_distance(rho, DensityOperator::maximally_mixed(2));
  EXPECT_NEAR(d * d, 0.125, 1e-15);
  EXPECT_THROW(hs_inner(id, HermitianOperator::identity(2)), ValidationError);
}

TEST(HilbertSchmidt, ItotIsSquaredDistanceToMaximallyMixed) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 2 + seed % 5;
    const DensityOperator rho = random_density(n, seed);
    const double d = hs_distance(rho, DensityOperator::maximally_mixed(n));
    EXPECT_NEAR(d * d, itot(rho), 1e-12);
  }
}

TEST(Generators, RotateBasis) {
  const ProjectiveBasis z = rotate_basis(Axis::kZ, 0.0);
  EXPECT_LT((z.vectors() - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-15);
  const ProjectiveBasis x = rotate_basis(Axis::kX, 0.0);
  EXPECT_LT((x.vector(0) - ket({kRt2, kRt2})).norm(), 1e-15);
  EXPECT_LT((x.vector(1) - ket({kRt2, -kRt2})).norm(), 1e-15);
  // z tilted by pi/2 toward x is the x basis.
  const ProjectiveBasis tilted = rotate_basis(Axis::kZ, M_PI / 2);
  EXPECT_LT((tilted.projector(0) - x.projector(0)).cwiseAbs().maxCoeff(), 1e-15);
  // Spin basis vectors are eigenvectors of d.sigma.
  const BlochVector d{0.3, -0.5, 0.2};
  const double len = std::sqrt(0.09 + 0.25 + 0.04);
  const CMatrix obs = (d[0] * sigma_x() + d[1] * sigma_y() + d[2] * sigma_z()) / len;
  const ProjectiveBasis s = spin_basis(d);
  EXPECT_LT((obs * s.vector(0) - s.vector(0)).norm(), 1e-12);
  EXPECT_LT((obs * s.vector(1) + s.vector(1)).norm(), 1e-12);
}

TEST(Generators, RandomDensityInvariants) {
  const DensityOperator rho = random_density(3, 7, 2);
  const ProbDist lam = spectrum(rho).eigenvalues;
  EXPECT_GT(lam[1], 1e-6);
  EXPECT_LT(lam[2], 1e-12);
  EXPECT_EQ(random_density(3, 7, 2).matrix(), rho.matrix());
  EXPECT_THROW(random_density(3, 7, 4), ValidationError);
  EXPECT_THROW(random_density(3, 7, 0), ValidationError);
  const CMatrix u = random_unitary(4, 11);
  EXPECT_LT((u.adjoint() * u - CMatrix::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Generators, BlochRoundTrip) {
  const BlochVector r{0.1, -0.2, 0.3};
  const BlochVector back = bloch_vector(DensityOperator::from_bloch(r));
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(back[i], r[i], 1e-15);
}
