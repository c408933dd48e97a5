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

#ifndef RCC_CORE_QUANTUM_STATE_HPP
#define RCC_CORE_QUANTUM_STATE_HPP

#include <span>
#include <vector>

#include "core/linalg.hpp"

namespace rcc {

/// Hermitian, unit-trace, positive semidefinite operator.
class DensityMatrix {
 public:
  int dim() const noexcept { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

  /// Wraps an operator produced by one of the library's evaluation paths.
  /// The matrix is Hermitized and rescaled to unit trace; positivity is
  /// guaranteed by construction of those paths, so it is not re-checked.
  static DensityMatrix from_computed(const ComplexMatrix& m);

 private:
  explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}
  friend DensityMatrix validate_density(const ComplexMatrix& m);

  ComplexMatrix matrix_;
};

/// Accepts m as a density matrix or throws NotHermitian / NotPositive /
/// BadTrace naming the measured violation. A trace within 1e-9 of one is
/// renormalized.
DensityMatrix validate_density(const ComplexMatrix& m);

/// |psi> = sum_k sqrt(w_k) |a_k>|beta_k>.
struct SchmidtForm {
  std::vector<double> weights;
  ComplexMatrix basis_a;  // dim_a x rank
  ComplexMatrix basis_b;  // dim_b x rank
  int rank = 0;
  /// Set when the rows of the coefficient matrix are mutually orthogonal
  /// (incoherent A-marginal). Then basis_a holds computational vectors,
  /// terms are ordered by their A index and a_index[k] names |i> for term k.
  bool computational_a = false;
  std::vector<int> a_index;
};

/// Pure state on H_A (x) H_B with amplitudes w_ij stored at i * dim_b + j.
class BipartitePureState {
 public:
  BipartitePureState(int dim_a, int dim_b, ComplexVector amplitudes);

  /// sum_i sqrt(weights[i]) |i>|basis_b.col(i)>, one term per A index.
  static BipartitePureState from_schmidt(std::span<const double> weights,
                                         const ComplexMatrix& basis_b);

  int dim_a() const noexcept { return dim_a_; }
  int dim_b() const noexcept { return dim_b_; }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  /// W with W(i, j) = w_ij.
  ComplexMatrix coefficients() const;
  ComplexMatrix projector() const { return amplitudes_ * amplitudes_.adjoint(); }
  const SchmidtForm& schmidt() const noexcept { return schmidt_; }

 private:
  int dim_a_;
  int dim_b_;
  ComplexVector amplitudes_;
  SchmidtForm schmidt_;
};

SchmidtForm schmidt_decompose(const BipartitePureState& psi);

/// Paired orthonormal bases, one column per A dimension: column i of `a`
/// pairs with column i of `b`. Schmidt terms keep their vectors; missing
/// directions are completed by Gram-Schmidt against computational vectors.
struct SchmidtFrame {
  ComplexMatrix a;  // dim_a x dim_a
  ComplexMatrix b;  // dim_b x dim_a
};

/// Requires dim_b >= dim_a.
SchmidtFrame schmidt_frame(const BipartitePureState& psi);

/// sqrt(2 (1 - tr rho_A^2)) evaluated from the Schmidt weights.
double concurrence(const BipartitePureState& psi);

DensityMatrix reduced_a(const BipartitePureState& psi);
DensityMatrix reduced_a(const DensityMatrix& rho_ab, int dim_a, int dim_b);

/// Column-vector Kronecker product.
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

}  // namespace rcc

#endif  // RCC_CORE_QUANTUM_STATE_HPP
