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

#include "core/coherence.hpp"
#include "core/rcc.hpp"
#include "core/sampling.hpp"
#include "support.hpp"

namespace rcc {
namespace {

using test::kInvSqrt2;
using test::mat;
using test::vec;

// Average over Kraus branches through the generic lift-and-trace path.
double generic_average(const BipartitePureState& psi, const KrausOperation& channel) {
  double total = 0.0;
  for (const auto& f : channel.kraus()) {
    const KrausOperation branch(channel.dim_b(), {f});
    const ComplexMatrix m = unnormalized_post_state_a(psi.projector(), psi.dim_a(), psi.dim_b(),
                                                      branch);
    if (m.trace().real() < 1e-14) continue;
    const PostState post = post_operation_state_a_generic(psi, branch);
    total += post.probability * l1_coherence(post.state_a);
  }
  return total;
}

TEST(ClosedForm, HadamardBetaBellDamping) {
  const BipartitePureState psi = test::hadamard_beta_state(0.5);
  for (double r : {0.25, 0.5, 0.75}) {
    const KrausOperation channel = phase_damping(r);
    EXPECT_NEAR(test::oracle_average(psi, channel), r, 1e-12);
    EXPECT_NEAR(generic_average(psi, channel), r, 1e-12);
    EXPECT_NEAR(average_rcc(psi, channel).average_rcc, r, 1e-12);
  }
}

TEST(ClosedForm, UnevenWeightsAtHalfDamping) {
  const BipartitePureState psi = test::hadamard_beta_state(0.9);
  const KrausOperation channel = phase_damping(0.5);
  EXPECT_NEAR(test::oracle_average(psi, channel), 0.3, 1e-12);
  EXPECT_NEAR(generic_average(psi, channel), 0.3, 1e-12);
  const RccReport report = average_rcc(psi, channel);
  EXPECT_NEAR(report.average_rcc, 0.3, 1e-12);
  EXPECT_NEAR(report.entanglement, 0.6, 1e-12);
}

TEST(ClosedForm, GeneralWeights) {
  // 2 r sqrt(w0 w1)
  for (double w0 : {0.05, 0.3, 0.6}) {
    for (double r : {0.1, 0.9, 1.0}) {
      const double expected = 2.0 * r * std::sqrt(w0 * (1.0 - w0));
      const BipartitePureState psi = test::hadamard_beta_state(w0);
      EXPECT_NEAR(test::oracle_average(psi, phase_damping(r)), expected, 1e-12);
      EXPECT_NEAR(average_rcc(psi, phase_damping(r)).average_rcc, expected, 1e-12);
    }
  }
}

TEST(ClosedForm, BellWithDampingCreatesNothing) {
  for (double r : {0.0, 0.3, 1.0}) {
    EXPECT_LT(average_rcc(test::bell(), phase_damping(r)).average_rcc, 1e-15);
  }
}

TEST(PostState, BellPlusProjector) {
  const KrausOperation op(2, {0.5 * mat(2, 2, {1, 1, 1, 1})});
  const PostState post = post_operation_state_a(test::bell(), op);
  EXPECT_NEAR(post.probability, 0.5, 1e-15);
  EXPECT_LT(max_abs(post.state_a.matrix() - 0.5 * mat(2, 2, {1, 1, 1, 1})), 1e-15);
  EXPECT_NEAR(l1_coherence(post.state_a), 1.0, 1e-15);
}

TEST(PostState, IdentityLeavesMarginal) {
  SeededRng rng(40, 0);
  const BipartitePureState psi = random_pure_bipartite(3, 2, rng);
  const PostState post = post_operation_state_a(psi, KrausOperation(2, {ComplexMatrix::Identity(2, 2)}));
  EXPECT_NEAR(post.probability, 1.0, 1e-14);
  EXPECT_LT(max_abs(post.state_a.matrix() - reduced_a(psi).matrix()), 1e-14);
}

TEST(PostState, ZeroProbability) {
  const BipartitePureState psi(2, 2, vec({1, 0, 0, 0}));
  const KrausOperation op(2, {mat(2, 2, {0, 0, 0, 1})});
  test::expect_error([&] { post_operation_state_a(psi, op); }, ErrorCode::ZeroProbability);
  test::expect_error([&] { post_operation_state_a_generic(psi, op); },
                     ErrorCode::ZeroProbability);
}

TEST(AverageRcc, ZeroProbabilityBranchIsFlagged) {
  const BipartitePureState psi(2, 2, vec({1, 0, 0, 0}));
  const RccReport report = average_rcc(psi, phase_damping(1.0));
  ASSERT_EQ(report.outcomes.size(), 2u);
  EXPECT_FALSE(report.outcomes[0].zero_probability);
  EXPECT_TRUE(report.outcomes[1].zero_probability);
  EXPECT_FALSE(report.outcomes[1].state_a.has_value());
  EXPECT_EQ(report.average_rcc, 0.0);
}

TEST(AverageRcc, RequiresTracePreserving) {
  const KrausOperation op(2, {0.5 * mat(2, 2, {1, 1, 1, 1})});
  test::expect_error([&] { average_rcc(test::bell(), op); }, ErrorCode::NotTracePreserving);
}

TEST(AverageRcc, RequiresIncoherentA) {
  const BipartitePureState psi(2, 2, vec({0.5, 0.5, 0.5, 0.5}));
  test::expect_error([&] { average_rcc(psi, phase_damping(0.3)); }, ErrorCode::PremiseViolated);
}

TEST(AverageRcc, HadamardMeasurementOnBell) {
  const RccReport report = average_rcc(test::bell(), projective_measurement(test::hadamard()));
  EXPECT_NEAR(report.average_rcc, 1.0, 1e-15);
  for (const auto& rec : report.outcomes) {
    EXPECT_NEAR(rec.probability, 0.5, 1e-15);
    EXPECT_NEAR(rec.coherence, 1.0, 1e-15);
  }
}

TEST(OutcomeBound, BellPlusProjectorIsTight) {
  const KrausOperation op(2, {0.5 * mat(2, 2, {1, 1, 1, 1})});
  EXPECT_NEAR(lemma1_bound(test::bell(), op), 1.0, 1e-15);
  EXPECT_NEAR(l1_coherence(post_operation_state_a(test::bell(), op).state_a), 1.0, 1e-15);
}

TEST(OutcomeBound, InertIsNonNegative) {
  SeededRng rng(41, 0);
  const BipartitePureState psi = random_incoherent_a_state(3, 3, rng);
  const double n[] = {1.0, 0.2, 0.7};
  const KrausOperation op = inert_operation(psi, n);
  EXPECT_GE(lemma1_bound(psi, op), 0.0);
  EXPECT_LT(l1_coherence(post_operation_state_a(psi, op).state_a), 1e-12);
}

TEST(Partner, BellIsItself) {
  const BipartitePureState phi = maximally_entangled_partner(test::bell());
  EXPECT_NEAR(std::abs(phi.amplitudes().dot(test::bell().amplitudes())), 1.0, 1e-15);
}

TEST(Partner, EqualizesWeightsKeepsBasis) {
  const BipartitePureState phi = maximally_entangled_partner(test::hadamard_beta_state(0.9));
  const ComplexVector expected = test::hadamard_beta_state(0.5).amplitudes();
  EXPECT_NEAR(std::abs(phi.amplitudes().dot(expected)), 1.0, 1e-15);
}

TEST(Partner, FullRankQutrits) {
  SeededRng rng(42, 0);
  const BipartitePureState phi = maximally_entangled_partner(random_incoherent_a_state(3, 3, rng));
  for (double w : phi.schmidt().weights) EXPECT_NEAR(w, 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(concurrence(phi), std::sqrt(4.0 / 3.0), 1e-12);
}

TEST(Partner, RankDeficientCompletes) {
  const BipartitePureState psi(2, 3, vec({0, 1, 0, 0, 0, 0}));
  const BipartitePureState phi = maximally_entangled_partner(psi);
  EXPECT_EQ(phi.schmidt().rank, 2);
  EXPECT_NEAR(concurrence(phi), 1.0, 1e-12);
}

TEST(Partner, RejectsSmallerB) {
  const BipartitePureState psi(3, 2, vec({1, 0, 0, 0, 0, 0}));
  test::expect_error([&] { maximally_entangled_partner(psi); }, ErrorCode::DimensionMismatch);
}

TEST(DimensionBound, QubitBoundIsExact) {
  const BipartitePureState psi = test::hadamard_beta_state(0.9);
  const KrausOperation channel = phase_damping(0.5);
  EXPECT_NEAR(theorem3_bound(psi, channel), 0.3, 1e-12);
  EXPECT_NEAR(tighter_bound(psi, channel), 0.3, 1e-12);
}

TEST(DimensionBound, ProductStateIsZero) {
  const BipartitePureState psi(2, 2, vec({0, 1, 0, 0}));
  EXPECT_EQ(theorem3_bound(psi, phase_damping(0.6)), 0.0);
  EXPECT_EQ(average_rcc(psi, phase_damping(0.6)).average_rcc, 0.0);
}

TEST(TighterBound, InertChannelIsZero) {
  SeededRng rng(43, 0);
  const BipartitePureState psi = random_incoherent_a_state(3, 3, rng);
  const double a[] = {1.0, 0.5, 0.25};
  const double b[] = {0.0, 0.5, 0.75};
  const ChannelEnsemble ensemble({inert_operation(psi, a), inert_operation(psi, b)});
  EXPECT_LT(tighter_bound(psi, ensemble), 1e-12);
  EXPECT_LT(average_rcc(psi, ensemble).average_rcc, 1e-12);
}

TEST(Factorization, UnevenWeights) {
  const FactorizationResult f = factorization_check(test::hadamard_beta_state(0.9),
                                                    phase_damping(0.5));
  EXPECT_NEAR(f.average_rcc, 0.3, 1e-12);
  EXPECT_NEAR(f.maxent_average_rcc, 0.5, 1e-12);
  EXPECT_NEAR(f.entanglement, 0.6, 1e-12);
  ASSERT_TRUE(f.ratio.has_value());
  EXPECT_NEAR(*f.ratio, 0.6, 1e-12);
  EXPECT_TRUE(f.holds);
}

TEST(Factorization, ProductState) {
  const FactorizationResult f =
      factorization_check(BipartitePureState(2, 2, vec({1, 0, 0, 0})), phase_damping(0.5));
  EXPECT_EQ(f.average_rcc, 0.0);
  EXPECT_TRUE(f.holds);
}

TEST(Factorization, WrongDimension) {
  SeededRng rng(44, 0);
  const BipartitePureState psi = random_incoherent_a_state(3, 3, rng);
  test::expect_error([&] { factorization_check(psi, random_tp_channel(3, rng)); },
                     ErrorCode::WrongDimension);
}

TEST(FindCreating, Bell) {
  const auto found = find_creating_operation(validate_density(test::bell().projector()), 2, 2);
  ASSERT_TRUE(found.has_value());
  EXPECT_NEAR(found->coherence, 1.0, 1e-12);
}

TEST(FindCreating, IncoherentQuantumHasNone) {
  SeededRng rng(45, 0);
  EXPECT_FALSE(find_creating_operation(random_incoherent_quantum(2, 3, rng), 2, 3).has_value());
}

TEST(FindCreating, SeparableCoherentCorrelated) {
  const ComplexVector plus = vec({kInvSqrt2, kInvSqrt2});
  const ComplexVector minus = vec({kInvSqrt2, -kInvSqrt2});
  const ComplexMatrix rho =
      0.5 * (tensor_product(plus * plus.adjoint(), mat(2, 2, {1, 0, 0, 0})) +
             tensor_product(minus * minus.adjoint(), mat(2, 2, {0, 0, 0, 1})));
  const auto found = find_creating_operation(validate_density(rho), 2, 2);
  ASSERT_TRUE(found.has_value());
  EXPECT_GT(found->coherence, kCreatingThreshold);
}

TEST(FindCreating, Deterministic) {
  SeededRng rng(46, 0);
  const DensityMatrix rho = random_non_incoherent_quantum(3, 3, rng);
  const auto a = find_creating_operation(rho, 3, 3);
  const auto b = find_creating_operation(rho, 3, 3);
  ASSERT_TRUE(a && b);
  EXPECT_EQ(a->coherence, b->coherence);
}

// Properties over random inputs.

TEST(RccProperty, FastGenericAndOracleAgree) {
  SeededRng rng(400, 0);
  const std::pair<int, int> dims[] = {{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 4}};
  for (auto [da, db] : dims) {
    for (int k = 0; k < 300; ++k) {
      const BipartitePureState psi = (k % 2 == 0 && db >= da) ? random_incoherent_a_state(da, db, rng)
                                                  : random_pure_bipartite(da, db, rng);
      const KrausOperation op = random_operation(db, rng);
      const ComplexMatrix oracle = test::block_trace_oracle(psi, op);
      const double p = oracle.trace().real();
      const PostState fast = post_operation_state_a(psi, op);
      const PostState generic = post_operation_state_a_generic(psi, op);
      const PostState mixed = post_operation_state_a(validate_density(psi.projector()), da, db, op);
      EXPECT_NEAR(fast.probability, p, 1e-10);
      EXPECT_NEAR(generic.probability, p, 1e-10);
      EXPECT_LT(max_abs(fast.state_a.matrix() - oracle / p), 1e-10);
      EXPECT_LT(max_abs(generic.state_a.matrix() - oracle / p), 1e-10);
      EXPECT_LT(max_abs(mixed.state_a.matrix() - oracle / p), 1e-10);
    }
  }
}

TEST(RccProperty, MixedLiftMatchesIndexSum) {
  SeededRng rng(401, 0);
  for (int k = 0; k < 300; ++k) {
    const int da = 2 + static_cast<int>(rng.below(2));
    const int db = 2 + static_cast<int>(rng.below(2));
    const DensityMatrix rho = random_density(da * db, rng);
    const KrausOperation op = random_operation(db, rng);
    EXPECT_LT(max_abs(unnormalized_post_state_a(rho.matrix(), da, db, op) -
                      test::mixed_oracle(rho.matrix(), da, db, op)),
              1e-12);
  }
}

TEST(RccProperty, NoSignaling) {
  SeededRng rng(402, 0);
  for (int k = 0; k < 1000; ++k) {
    const int da = 2 + static_cast<int>(rng.below(3));
    const int db = 2 + static_cast<int>(rng.below(3));
    const DensityMatrix rho = random_density(da * db, rng);
    const KrausOperation channel = random_tp_channel(db, rng);
    ComplexMatrix sum = ComplexMatrix::Zero(da, da);
    for (const auto& f : channel.kraus()) {
      sum += unnormalized_post_state_a(rho.matrix(), da, db, KrausOperation(db, {f}));
    }
    EXPECT_LT(max_abs(sum - reduced_a(rho, da, db).matrix()), 1e-10);
  }
}

TEST(RccProperty, ScalarBranchesCreateNothing) {
  SeededRng rng(403, 0);
  for (int k = 0; k < 500; ++k) {
    const BipartitePureState psi = random_incoherent_a_state(2, 2, rng);
    const double p = rng.uniform();
    for (const KrausOperation& channel :
         {bit_flip(p), phase_flip(p), bit_phase_flip(p), depolarizing(p)}) {
      EXPECT_LT(average_rcc(psi, channel).average_rcc, 1e-12);
    }
  }
}

TEST(RccProperty, IncoherentQuantumStaysIncoherent) {
  SeededRng rng(404, 0);
  for (int k = 0; k < 300; ++k) {
    const DensityMatrix rho = random_incoherent_quantum(3, 2, rng);
    const KrausOperation op = random_operation(2, rng);
    EXPECT_LT(l1_coherence(post_operation_state_a(rho, 3, 2, op).state_a), 1e-8);
  }
}

TEST(RccProperty, BoundOrdering) {
  SeededRng rng(405, 0);
  for (int d : {2, 3, 4}) {
    for (int k = 0; k < 500; ++k) {
      const BipartitePureState psi = random_incoherent_a_state(d, d, rng);
      const KrausOperation op = random_operation(d, rng);
      if (post_operation_state_a(psi, op).probability > 1e-14) {
        EXPECT_LE(l1_coherence(post_operation_state_a(psi, op).state_a),
                  lemma1_bound(psi, op) + 1e-10);
      }
      const Channel channel = (k % 2 == 0) ? Channel(random_tp_channel(d, rng))
                                           : Channel(random_ensemble(d, rng));
      const RccReport report = average_rcc(psi, channel);
      ASSERT_TRUE(report.theorem3_bound.has_value());
      EXPECT_LE(report.average_rcc, report.tighter_bound + 1e-10);
      EXPECT_LE(report.tighter_bound, *report.theorem3_bound + 1e-10);
    }
  }
}

TEST(RccProperty, QubitFactorization) {
  SeededRng rng(406, 0);
  for (int k = 0; k < 2000; ++k) {
    const BipartitePureState psi = random_incoherent_a_state(2, 2, rng);
    const Channel channel = (k % 2 == 0) ? Channel(random_tp_channel(2, rng))
                                         : Channel(random_ensemble(2, rng));
    const FactorizationResult f = factorization_check(psi, channel);
    EXPECT_LT(std::abs(f.average_rcc - f.entanglement * f.maxent_average_rcc), 1e-9);
    EXPECT_TRUE(f.holds);
    EXPECT_NEAR(tighter_bound(psi, channel), theorem3_bound(psi, channel), 1e-12);
  }
}

}  // namespace
}  // namespace rcc
