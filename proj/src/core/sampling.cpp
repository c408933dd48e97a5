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

#include "core/sampling.hpp"

#include <cmath>

#include "core/coherence.hpp"
#include "core/errors.hpp"

namespace rcc {

namespace {

std::vector<ComplexMatrix> ginibre_set(int dim, int count, SeededRng& rng) {
  std::vector<ComplexMatrix> out;
  for (int n = 0; n < count; ++n) out.push_back(ginibre(dim, dim, rng));
  return out;
}

ComplexMatrix summary(const std::vector<ComplexMatrix>& kraus) {
  ComplexMatrix n = ComplexMatrix::Zero(kraus.front().rows(), kraus.front().cols());
  for (const auto& f : kraus) n += f.adjoint() * f;
  return 0.5 * (n + n.adjoint());
}

std::vector<ComplexMatrix> make_trace_preserving(std::vector<ComplexMatrix> kraus) {
  const EigResult eig = hermitian_eig(summary(kraus));
  Eigen::VectorXd inv_roots(static_cast<Eigen::Index>(eig.values.size()));
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    inv_roots(static_cast<Eigen::Index>(k)) = 1.0 / std::sqrt(eig.values[k]);
  }
  const ComplexMatrix inv_sqrt = eig.vectors * inv_roots.asDiagonal() * eig.vectors.adjoint();
  for (auto& f : kraus) f = f * inv_sqrt;
  return kraus;
}

}  // namespace

BipartitePureState random_incoherent_a_state(int dim_a, int dim_b, SeededRng& rng) {
  if (dim_b < dim_a) {
    throw Error(ErrorCode::DimensionMismatch, "random_incoherent_a_state: dim_b < dim_a");
  }
  const ComplexVector w = random_pure_state(dim_a, rng);
  std::vector<double> weights(static_cast<std::size_t>(dim_a));
  for (int i = 0; i < dim_a; ++i) weights[static_cast<std::size_t>(i)] = std::norm(w(i));
  const ComplexMatrix u = haar_random_unitary(dim_b, rng);
  return BipartitePureState::from_schmidt(weights, u.leftCols(dim_a));
}

BipartitePureState random_pure_bipartite(int dim_a, int dim_b, SeededRng& rng) {
  return BipartitePureState(dim_a, dim_b, random_pure_state(dim_a * dim_b, rng));
}

DensityMatrix random_density(int dim, SeededRng& rng) {
  const ComplexMatrix g = ginibre(dim, dim, rng);
  return DensityMatrix::from_computed(g * g.adjoint());
}

DensityMatrix random_incoherent_quantum(int dim_a, int dim_b, SeededRng& rng) {
  const ComplexVector p = random_pure_state(dim_a, rng);
  ComplexMatrix rho = ComplexMatrix::Zero(dim_a * dim_b, dim_a * dim_b);
  for (int i = 0; i < dim_a; ++i) {
    rho.block(i * dim_b, i * dim_b, dim_b, dim_b) =
        std::norm(p(i)) * random_density(dim_b, rng).matrix();
  }
  return DensityMatrix::from_computed(rho);
}

DensityMatrix random_non_incoherent_quantum(int dim_a, int dim_b, SeededRng& rng) {
  for (;;) {
    const auto kind = rng.below(3);
    ComplexMatrix rho;
    if (kind == 0) {
      rho = random_density(dim_a * dim_b, rng).matrix();
    } else if (kind == 1) {
      rho = random_pure_bipartite(dim_a, dim_b, rng).projector();
    } else {
      rho = ComplexMatrix::Zero(dim_a * dim_b, dim_a * dim_b);
      const ComplexVector q = random_pure_state(2, rng);
      for (int t = 0; t < 2; ++t) {
        const ComplexVector v =
            kron(random_pure_state(dim_a, rng), random_pure_state(dim_b, rng));
        rho += std::norm(q(t)) * v * v.adjoint();
      }
    }
    DensityMatrix out = DensityMatrix::from_computed(rho);
    if (!is_incoherent_quantum(out, dim_a, dim_b)) return out;
  }
}

KrausOperation random_operation(int dim_b, SeededRng& rng) {
  auto kraus = ginibre_set(dim_b, 1 + static_cast<int>(rng.below(3)), rng);
  const double top = hermitian_eig(summary(kraus)).values.front();
  for (auto& f : kraus) f /= std::sqrt(top);
  return KrausOperation(dim_b, std::move(kraus), "random");
}

KrausOperation random_tp_channel(int dim_b, SeededRng& rng) {
  auto kraus = make_trace_preserving(ginibre_set(dim_b, 1 + static_cast<int>(rng.below(3)), rng));
  return KrausOperation(dim_b, std::move(kraus), "random_tp");
}

ChannelEnsemble random_ensemble(int dim_b, SeededRng& rng) {
  const int count = 2 + static_cast<int>(rng.below(4));
  auto kraus = make_trace_preserving(ginibre_set(dim_b, count, rng));
  const auto split = static_cast<std::ptrdiff_t>(count / 2);
  std::vector<KrausOperation> ops;
  ops.emplace_back(dim_b, std::vector<ComplexMatrix>(kraus.begin(), kraus.begin() + split),
                   "member[0]");
  ops.emplace_back(dim_b, std::vector<ComplexMatrix>(kraus.begin() + split, kraus.end()),
                   "member[1]");
  return ChannelEnsemble(std::move(ops));
}

}  // namespace rcc
