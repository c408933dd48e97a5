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

#include "core/coherence.hpp"

#include <string>

#include "core/errors.hpp"

namespace rcc {

double l1_coherence(const ComplexMatrix& rho) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < rho.rows(); ++i) {
    for (Eigen::Index j = 0; j < rho.cols(); ++j) {
      if (i != j) sum += std::abs(rho(i, j));
    }
  }
  return sum;
}

double l1_coherence(const DensityMatrix& rho) { return l1_coherence(rho.matrix()); }

bool is_incoherent(const DensityMatrix& rho, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "is_incoherent: tol must be > 0");
  ComplexMatrix off = rho.matrix();
  off.diagonal().setZero();
  return max_abs(off) < tol;
}

bool is_incoherent_quantum(const DensityMatrix& rho_ab, int dim_a, int dim_b, double tol) {
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "is_incoherent_quantum: tol must be > 0");
  }
  if (dim_a < 1 || dim_b < 1 || rho_ab.dim() != dim_a * dim_b) {
    throw Error(ErrorCode::DimensionMismatch,
                "is_incoherent_quantum: side " + std::to_string(rho_ab.dim()) +
                    " does not equal dim_a*dim_b");
  }
  const ComplexMatrix& m = rho_ab.matrix();
  for (int i = 0; i < dim_a; ++i) {
    for (int k = 0; k < dim_a; ++k) {
      if (i == k) continue;
      if (max_abs(m.block(i * dim_b, k * dim_b, dim_b, dim_b)) >= tol) return false;
    }
  }
  return true;
}

}  // namespace rcc
