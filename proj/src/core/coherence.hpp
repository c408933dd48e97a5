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

#ifndef RCC_CORE_COHERENCE_HPP
#define RCC_CORE_COHERENCE_HPP

#include "core/quantum_state.hpp"

namespace rcc {

// The reference basis is the computational basis throughout.

/// Sum of the moduli of all off-diagonal entries.
double l1_coherence(const ComplexMatrix& rho);
double l1_coherence(const DensityMatrix& rho);

/// True iff every off-diagonal entry has modulus below tol.
bool is_incoherent(const DensityMatrix& rho, double tol = tolerance::kValidity);

/// True iff rho_ab is block diagonal with respect to A's computational basis,
/// i.e. every block (<i| (x) 1) rho (|k> (x) 1) with i != k vanishes within
/// tol. These are exactly the states sum_i p_i |i><i| (x) rho_i.
bool is_incoherent_quantum(const DensityMatrix& rho_ab, int dim_a, int dim_b,
                           double tol = tolerance::kValidity);

}  // namespace rcc

#endif  // RCC_CORE_COHERENCE_HPP
