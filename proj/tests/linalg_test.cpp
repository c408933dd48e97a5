// Copyright 2026 The rcc-lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>

#include "core/linalg.hpp"
#include "support.hpp"

namespace rcc {
namespace {

using test::mat;

TEST(TensorProduct, IdentityTimesIdentity) {
  const ComplexMatrix out = tensor_product(ComplexMatrix::Identity(2, 2),
                                           ComplexMatrix::Identity(2, 2));
  EXPECT_LT(max_abs(out - ComplexMatrix::Identity(4, 4)), 1e-15);
}

TEST(TensorProduct, ProjectorTimesX) {
  const ComplexMatrix out = tensor_product(mat(2, 2, {1, 0, 0, 0}), test::pauli_x());
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected.block(0, 0, 2, 2) = test::pauli_x();
  EXPECT_LT(max_abs(out - expected), 1e-15);
}

TEST(TensorProduct, DiagonalKronecker) {
  const ComplexMatrix out = tensor_product(mat(2, 2, {1, 0, 0, 2}), mat(2, 2, {3, 0, 0, 4}));
  const Eigen::Vector4cd d(3, 4, 6, 8);
  ComplexMatrix expected = d.asDiagonal();
  EXPECT_LT(max_abs(out - expected), 1e-15);
}

TEST(PartialTrace, ProductMarginal) {
  SeededRng rng(1, 0);
  const ComplexMatrix a = ginibre(3, 3, rng);
  ComplexMatrix b = ginibre(2, 2, rng);
  b = b * b.adjoint();
  b /= b.trace();
  const ComplexMatrix out = partial_trace(tensor_product(a, b), 3, 2, Subsystem::A);
  EXPECT_LT(max_abs(out - a), 1e-12);
}

TEST(PartialTrace, BellMarginals) {
  const ComplexVector phi = test::vec({test::kInvSqrt2, 0, 0, test::kInvSqrt2});
  const ComplexMatrix rho = phi * phi.adjoint();
  const ComplexMatrix half = 0.5 * ComplexMatrix::Identity(2, 2);
  EXPECT_LT(max_abs(partial_trace(rho, 2, 2, Subsystem::A) - half), 1e-15);
  EXPECT_LT(max_abs(partial_trace(rho, 2, 2, Subsystem::B) - half), 1e-15);
}

TEST(PartialTrace, RejectsWrongSize) {
  test::expect_error([] { partial_trace(ComplexMatrix::Identity(5, 5), 2, 2, Subsystem::A); },
                     ErrorCode::DimensionMismatch);
}

TEST(Svd, Identity) {
  const SvdResult r = svd(ComplexMatrix::Identity(3, 3));
  for (double s : r.s) EXPECT_NEAR(s, 1.0, 1e-15);
}

TEST(Svd, DescendingOrder) {
  const SvdResult r = svd(mat(2, 2, {3, 0, 0, 4}));
  ASSERT_EQ(r.s.size(), 2u);
  EXPECT_NEAR(r.s[0], 4.0, 1e-14);
  EXPECT_NEAR(r.s[1], 3.0, 1e-14);
}

TEST(Svd, FixedRandomResidual) {
  SeededRng rng(42, 0);
  const ComplexMatrix w = ginibre(2, 2, rng);
  const SvdResult r = svd(w);
  const Eigen::VectorXd s = Eigen::Map<const Eigen::VectorXd>(r.s.data(), 2);
  EXPECT_LT((w - r.u * s.cast<Complex>().asDiagonal() * r.v.adjoint()).norm(), 1e-12);
}

TEST(Svd, CanonicalPhase) {
  SeededRng rng(43, 0);
  const SvdResult r = svd(ginibre(4, 3, rng));
  for (int k = 0; k < r.u.cols(); ++k) {
    Eigen::Index row = 0;
    r.u.col(k).cwiseAbs().maxCoeff(&row);
    EXPECT_GT(r.u(row, k).real(), 0.0);
    EXPECT_NEAR(r.u(row, k).imag(), 0.0, 1e-14);
  }
}

TEST(HermitianEig, DampingDiagonal) {
  const double r = 0.3;
  const EigResult e = hermitian_eig(mat(2, 2, {1, 0, 0, 1 - r}));
  EXPECT_NEAR(e.values[0], 1.0, 1e-15);
  EXPECT_NEAR(e.values[1], 1.0 - r, 1e-15);
  EXPECT_NEAR(std::abs(e.vectors(0, 0)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(e.vectors(1, 1)), 1.0, 1e-15);
}

TEST(HermitianEig, PauliX) {
  const EigResult e = hermitian_eig(test::pauli_x());
  EXPECT_NEAR(e.values[0], 1.0, 1e-15);
  EXPECT_NEAR(e.values[1], -1.0, 1e-15);
  EXPECT_NEAR(std::abs(e.vectors(0, 0)), test::kInvSqrt2, 1e-15);
  EXPECT_NEAR(std::abs(e.vectors(1, 0)), test::kInvSqrt2, 1e-15);
  EXPECT_NEAR(std::abs(e.vectors(0, 0) + e.vectors(1, 0)), std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(std::abs(e.vectors(0, 1) - e.vectors(1, 1)), std::sqrt(2.0), 1e-14);
}

TEST(HermitianEig, RandomResidual) {
  SeededRng rng(5, 0);
  const ComplexMatrix g = ginibre(4, 4, rng);
  const ComplexMatrix h = g + g.adjoint();
  const EigResult e = hermitian_eig(h);
  for (int k = 0; k < 4; ++k) {
    EXPECT_LT((h * e.vectors.col(k) - e.values[k] * e.vectors.col(k)).norm(), 1e-10);
  }
}

TEST(HermitianEig, RejectsNonHermitian) {
  test::expect_error([] { hermitian_eig(mat(2, 2, {0, 1, 0, 0})); }, ErrorCode::NotHermitian);
}

TEST(Commutator, IdentityCommutes) {
  SeededRng rng(6, 0);
  const ComplexMatrix m = ginibre(3, 3, rng);
  EXPECT_EQ(max_abs(commutator(ComplexMatrix::Identity(3, 3), m)), 0.0);
}

TEST(Commutator, DiagonalWithX) {
  // diag(1,2) X - X diag(1,2) = [[0, -1], [1, 0]]
  const ComplexMatrix c = commutator(mat(2, 2, {1, 0, 0, 2}), test::pauli_x());
  EXPECT_LT(max_abs(c - mat(2, 2, {0, -1, 1, 0})), 1e-15);
  EXPECT_NEAR(c.norm(), std::sqrt(2.0), 1e-15);
}

TEST(Commutator, EigenvectorProjector) {
  SeededRng rng(7, 0);
  const ComplexMatrix g = ginibre(3, 3, rng);
  const ComplexMatrix n = g * g.adjoint();
  const EigResult e = hermitian_eig(n);
  const ComplexMatrix p = e.vectors.col(1) * e.vectors.col(1).adjoint();
  EXPECT_LT(commutator(n, p).norm(), 1e-12);
}

TEST(Haar, ScalarHasUnitModulus) {
  SeededRng rng(8, 0);
  const ComplexMatrix u = haar_random_unitary(1, rng);
  ASSERT_EQ(u.rows(), 1);
  EXPECT_NEAR(std::abs(u(0, 0)), 1.0, 1e-15);
}

TEST(Haar, Unitary4) {
  SeededRng rng(9, 0);
  const ComplexMatrix u = haar_random_unitary(4, rng);
  EXPECT_LT(max_abs(u * u.adjoint() - ComplexMatrix::Identity(4, 4)), 1e-12);
}

TEST(Haar, SecondMomentMonteCarlo) {
  // E|U_00|^2 = 1/d
  SeededRng rng(10, 0);
  double sum = 0.0;
  const int n = 100000;
  for (int k = 0; k < n; ++k) sum += std::norm(haar_random_unitary(2, rng)(0, 0));
  EXPECT_NEAR(sum / n, 0.5, 0.01);
}

TEST(Haar, FourthMomentMonteCarlo) {
  // E|U_00|^4 = 2 / (d (d + 1)) for Haar; a non-Haar QR without the phase fix drifts here.
  SeededRng rng(11, 0);
  double sum = 0.0;
  const int n = 100000;
  for (int k = 0; k < n; ++k) sum += std::pow(std::norm(haar_random_unitary(3, rng)(0, 0)), 2);
  EXPECT_NEAR(sum / n, 2.0 / 12.0, 0.005);
}

TEST(RandomPureState, UnitNorm) {
  SeededRng rng(12, 0);
  for (int d = 1; d <= 6; ++d) EXPECT_NEAR(random_pure_state(d, rng).norm(), 1.0, 1e-12);
}

TEST(RandomPureState, OneDimensionalIsPhase) {
  SeededRng rng(13, 0);
  const ComplexVector v = random_pure_state(1, rng);
  EXPECT_NEAR(std::abs(v(0)), 1.0, 1e-12);
}

TEST(RandomPureState, FirstComponentMoment) {
  SeededRng rng(14, 0);
  double sum = 0.0;
  const int n = 100000;
  for (int k = 0; k < n; ++k) sum += std::norm(random_pure_state(2, rng)(0));
  EXPECT_NEAR(sum / n, 0.5, 0.01);
}

TEST(SeededRng, StreamsDiffer) {
  SeededRng a(1, 0);
  SeededRng b(1, 1);
  EXPECT_NE(a.uniform(), b.uniform());
}

TEST(FixPhase, TieGoesToLowestRow) {
  ComplexVector v = test::vec({Complex(0, 0.5), Complex(-0.5, 0)});
  fix_phase(v);
  EXPECT_NEAR(v(0).real(), 0.5, 1e-15);
  EXPECT_NEAR(v(0).imag(), 0.0, 1e-15);
}

TEST(CompleteBasis, ExtendsToUnitary) {
  SeededRng rng(15, 0);
  const ComplexMatrix u = haar_random_unitary(4, rng);
  const ComplexMatrix full = complete_basis(u.leftCols(2), 4);
  EXPECT_TRUE(is_unitary(full));
  EXPECT_LT(max_abs(full.leftCols(2) - u.leftCols(2)), 1e-15);
}

// Properties over random inputs.

TEST(LinalgProperty, PartialTracePreservesTrace) {
  SeededRng rng(100, 0);
  for (int k = 0; k < 200; ++k) {
    const int da = 1 + static_cast<int>(rng.below(4));
    const int db = 1 + static_cast<int>(rng.below(4));
    const ComplexMatrix m = ginibre(da * db, da * db, rng);
    for (Subsystem keep : {Subsystem::A, Subsystem::B}) {
      EXPECT_LT(std::abs(partial_trace(m, da, db, keep).trace() - m.trace()), 1e-12);
    }
  }
}

TEST(LinalgProperty, TensorThenTraceRecoversFactor) {
  SeededRng rng(101, 0);
  for (int k = 0; k < 200; ++k) {
    const int da = 1 + static_cast<int>(rng.below(4));
    const int db = 1 + static_cast<int>(rng.below(4));
    const ComplexMatrix a = ginibre(da, da, rng);
    const ComplexMatrix b = ginibre(db, db, rng);
    const ComplexMatrix out = partial_trace(tensor_product(a, b), da, db, Subsystem::A);
    EXPECT_LT(max_abs(out - a * b.trace()), 1e-12);
  }
}

TEST(LinalgProperty, SvdReconstruction) {
  SeededRng rng(102, 0);
  for (int k = 0; k < 300; ++k) {
    const int rows = 1 + static_cast<int>(rng.below(16));
    const int cols = 1 + static_cast<int>(rng.below(16));
    const ComplexMatrix m = ginibre(rows, cols, rng);
    const SvdResult r = svd(m);
    const Eigen::VectorXd s =
        Eigen::Map<const Eigen::VectorXd>(r.s.data(), static_cast<Eigen::Index>(r.s.size()));
    EXPECT_LT((m - r.u * s.cast<Complex>().asDiagonal() * r.v.adjoint()).norm(), 1e-10);
    for (std::size_t j = 1; j < r.s.size(); ++j) EXPECT_GE(r.s[j - 1], r.s[j]);
  }
}

TEST(LinalgProperty, EigTraceAndOrthonormality) {
  SeededRng rng(103, 0);
  for (int k = 0; k < 300; ++k) {
    const int d = 1 + static_cast<int>(rng.below(16));
    const ComplexMatrix g = ginibre(d, d, rng);
    const ComplexMatrix h = g + g.adjoint();
    const EigResult e = hermitian_eig(h);
    double sum = 0.0;
    for (double v : e.values) sum += v;
    EXPECT_NEAR(sum, h.trace().real(), 1e-10);
    EXPECT_LT(max_abs(e.vectors.adjoint() * e.vectors - ComplexMatrix::Identity(d, d)), 1e-10);
  }
}

TEST(LinalgProperty, SelfCommutatorVanishes) {
  SeededRng rng(104, 0);
  for (int k = 0; k < 200; ++k) {
    const int d = 1 + static_cast<int>(rng.below(8));
    const ComplexMatrix a = ginibre(d, d, rng);
    EXPECT_LT(commutator(a, a).norm(), 1e-13);
  }
}

TEST(LinalgProperty, SamplersAreDeterministic) {
  SeededRng a(105, 3);
  SeededRng b(105, 3);
  for (int k = 0; k < 20; ++k) {
    EXPECT_EQ(max_abs(haar_random_unitary(3, a) - haar_random_unitary(3, b)), 0.0);
    EXPECT_EQ((random_pure_state(4, a) - random_pure_state(4, b)).cwiseAbs().maxCoeff(), 0.0);
  }
}

}  // namespace
}  // namespace rcc
