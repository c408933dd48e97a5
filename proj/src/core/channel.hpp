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

#ifndef RCC_CORE_CHANNEL_HPP
#define RCC_CORE_CHANNEL_HPP

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "core/quantum_state.hpp"

namespace rcc {

/// $(.) = sum_n F_n (.) F_n^dagger acting on subsystem B. The summary
/// operator N = sum_n F_n^dagger F_n satisfies 0 <= N <= 1; the set may be
/// trace decreasing (a post-selected branch).
class KrausOperation {
 public:
  KrausOperation(int dim_b, std::vector<ComplexMatrix> kraus, std::string label = {});

  int dim_b() const noexcept { return dim_b_; }
  const std::vector<ComplexMatrix>& kraus() const noexcept { return kraus_; }
  const std::string& label() const noexcept { return label_; }
  const ComplexMatrix& n_operator() const noexcept { return n_; }

 private:
  int dim_b_;
  std::vector<ComplexMatrix> kraus_;
  std::string label_;
  ComplexMatrix n_;
};

/// Operations $_k that are individually trace decreasing but whose summary
/// operators add up to the identity.
class ChannelEnsemble {
 public:
  explicit ChannelEnsemble(std::vector<KrausOperation> operations);

  int dim_b() const noexcept { return operations_.front().dim_b(); }
  const std::vector<KrausOperation>& operations() const noexcept { return operations_; }

 private:
  std::vector<KrausOperation> operations_;
};

using Channel = std::variant<KrausOperation, ChannelEnsemble>;

ComplexMatrix n_operator(const KrausOperation& op);
bool is_trace_preserving(const KrausOperation& op, double tol = tolerance::kValidity);
int channel_dim_b(const Channel& channel);

/// One post-selected outcome per Kraus operator of a trace-preserving
/// operation, or one per member of an ensemble. Throws NotTracePreserving
/// when a single operation does not sum to the identity.
std::vector<KrausOperation> outcome_branches(const Channel& channel);

// Qubit channels. Parameters must lie in [0, 1].
KrausOperation phase_damping(double r);
KrausOperation depolarizing(double p);  // rho -> (1 - p) rho + p 1/2
KrausOperation bit_flip(double p);
KrausOperation phase_flip(double p);
KrausOperation bit_phase_flip(double p);
/// Rank-one projectors onto the (orthonormal) columns of basis.
ChannelEnsemble projective_measurement(const ComplexMatrix& basis);

struct Theorem2Verdict {
  bool creates = false;
  std::optional<int> witness;  // smallest A index with a non-commuting branch
};

/// Decides whether op on B creates coherence on A for a pure state whose
/// A-marginal is incoherent: true iff [N, (<i| (x) 1)|psi><psi|(|i> (x) 1)]
/// has Frobenius norm above tol for some computational |i>. Throws
/// PremiseViolated for a coherent A-marginal.
Theorem2Verdict theorem2_predicate(const BipartitePureState& psi, const KrausOperation& op,
                                   double tol = tolerance::kValidity);

/// Single-Kraus operation F = N^{1/2} with N = sum_k n_k |b_k><b_k|, where
/// b_k runs over psi's Schmidt B vectors (ordered by A index) followed by a
/// deterministic completion of B. Directions beyond n_values get n = 0.
KrausOperation inert_operation(const BipartitePureState& psi, std::span<const double> n_values);

}  // namespace rcc

#endif  // RCC_CORE_CHANNEL_HPP
