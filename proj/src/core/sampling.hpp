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

#ifndef RCC_CORE_SAMPLING_HPP
#define RCC_CORE_SAMPLING_HPP

#include "core/channel.hpp"
#include "core/quantum_state.hpp"

namespace rcc {

/// sum_i sqrt(w_i) |i>|beta_i> with uniform weights on the simplex and beta
/// the first dim_a columns of a Haar unitary. The A-marginal is diagonal.
/// Requires dim_b >= dim_a.
BipartitePureState random_incoherent_a_state(int dim_a, int dim_b, SeededRng& rng);

/// Haar-random pure state on the joint space.
BipartitePureState random_pure_bipartite(int dim_a, int dim_b, SeededRng& rng);

/// G G^dagger / tr with G Ginibre.
DensityMatrix random_density(int dim, SeededRng& rng);

/// sum_i p_i |i><i| (x) rho_i with random weights and random rho_i.
DensityMatrix random_incoherent_quantum(int dim_a, int dim_b, SeededRng& rng);

/// Draws from a mix of generic mixed states, pure entangled states and
/// separable mixtures of coherent product states until the draw is not
/// incoherent-quantum.
DensityMatrix random_non_incoherent_quantum(int dim_a, int dim_b, SeededRng& rng);

/// One to three Ginibre Kraus operators rescaled so that the largest
/// eigenvalue of N is exactly one.
KrausOperation random_operation(int dim_b, SeededRng& rng);

/// One to three Ginibre Kraus operators F_n N^{-1/2}, so N = 1.
KrausOperation random_tp_channel(int dim_b, SeededRng& rng);

/// Two to five Ginibre Kraus operators made trace preserving, then split
/// into two groups that form the ensemble members.
ChannelEnsemble random_ensemble(int dim_b, SeededRng& rng);

}  // namespace rcc

#endif  // RCC_CORE_SAMPLING_HPP
