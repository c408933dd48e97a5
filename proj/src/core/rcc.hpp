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

#ifndef RCC_CORE_RCC_HPP
#define RCC_CORE_RCC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/channel.hpp"
#include "core/quantum_state.hpp"

namespace rcc {

struct PostState {
  DensityMatrix state_a;
  double probability;
};

/// tr_B[(1 (x) $) rho_ab] without normalization.
ComplexMatrix unnormalized_post_state_a(const ComplexMatrix& rho_ab, int dim_a, int dim_b,
                                        const KrausOperation& op);

/// Normalized A-state after op on B, and the probability tr[(1 (x) $) rho].
/// Throws ZeroProbability when that probability is below 1e-14.
PostState post_operation_state_a(const DensityMatrix& rho_ab, int dim_a, int dim_b,
                                 const KrausOperation& op);

/// Pure-state path through the Schmidt form:
///   rho_A' = sum_ij sqrt(w_i w_j) <beta_j|N|beta_i> |a_i><a_j| / p'.
/// Depends on the operation only through N.
PostState post_operation_state_a(const BipartitePureState& psi, const KrausOperation& op);

/// Same quantity by applying each Kraus operator to |psi> and tracing out B.
PostState post_operation_state_a_generic(const BipartitePureState& psi,
                                         const KrausOperation& op);

struct OutcomeRecord {
  std::string label;
  double probability = 0.0;
  std::optional<DensityMatrix> state_a;  // absent for zero-probability branches
  double coherence = 0.0;
  bool zero_probability = false;
  std::optional<double> lemma1_bound;
};

struct RccReport {
  int dim_a = 0;
  int dim_b = 0;
  std::vector<OutcomeRecord> outcomes;
  double average_rcc = 0.0;
  double entanglement = 0.0;
  double tighter_bound = 0.0;
  // Require dim_b >= dim_a so the maximally entangled partner exists.
  std::optional<double> maxent_average_rcc;
  std::optional<double> theorem3_bound;
  // 2 (x) 2 only.
  std::optional<double> factorization_ratio;
  std::optional<bool> factorization_holds;
};

/// Average coherence Alice gains when Bob applies the channel and announces
/// the outcome: sum_n p_n C(rho_A,n'). Each Kraus operator of a trace-
/// preserving operation is one outcome; each member of an ensemble is one
/// outcome. Throws PremiseViolated when psi's A-marginal is coherent and
/// NotTracePreserving for a trace-decreasing single operation.
RccReport average_rcc(const BipartitePureState& psi, const Channel& channel);

/// (E / p') sqrt(sum_{j<i} |N_ji|^2) with N in psi's Schmidt B basis.
double lemma1_bound(const BipartitePureState& psi, const KrausOperation& op);

/// 1/sqrt(d) sum_i |i>|beta_i> in psi's Schmidt frame, d = dim_a.
BipartitePureState maximally_entangled_partner(const BipartitePureState& psi);

/// (d / 2) E(psi) average_rcc(partner).
double theorem3_bound(const BipartitePureState& psi, const Channel& channel);

/// E(psi) sum_k sqrt(sum_{j<i} |N^k_ji|^2).
double tighter_bound(const BipartitePureState& psi, const Channel& channel);

struct FactorizationResult {
  std::optional<double> ratio;  // average(psi) / average(partner)
  bool holds = false;
  double average_rcc = 0.0;
  double maxent_average_rcc = 0.0;
  double entanglement = 0.0;
};

/// Checks average(psi) = E(psi) average(partner) on 2 (x) 2.
FactorizationResult factorization_check(const BipartitePureState& psi, const Channel& channel);

struct CreatingOperation {
  KrausOperation operation;
  double coherence;
};

inline constexpr int kCreatingSearchBudget = 512;
inline constexpr double kCreatingThreshold = 1e-6;

/// Looks for a rank-one projector on B that leaves A with coherence above
/// 1e-6. Returns nullopt iff rho_ab is incoherent-quantum. Tries a fixed set
/// of structured projectors, then kCreatingSearchBudget Haar-random ones
/// drawn from a stream keyed by the state's bytes, and returns the best.
/// Throws SearchExhausted when nothing clears the threshold.
std::optional<CreatingOperation> find_creating_operation(const DensityMatrix& rho_ab, int dim_a,
                                                         int dim_b);

}  // namespace rcc

#endif  // RCC_CORE_RCC_HPP
