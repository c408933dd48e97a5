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

#include "core/quantum_state.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "core/errors.hpp"

namespace rcc {

namespace {

std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

SchmidtForm decompose(const ComplexMatrix& w) {
  const int dim_a = static_cast<int>(w.rows());
  const int dim_b = static_cast<int>(w.cols());
  const ComplexMatrix rho_a = w * w.adjoint();
  ComplexMatrix off = rho_a;
  off.diagonal().setZero();

  SchmidtForm form;
  if (max_abs(off) < tolerance::kValidity) {
    // Orthogonal rows: (<i| (x) 1)|psi> = sqrt(w_i) |beta_i>.
    form.computational_a = true;
    std::vector<ComplexVector> betas;
    for (int i = 0; i < dim_a; ++i) {
      const double weight = w.row(i).squaredNorm();
      if (weight <= tolerance::kSchmidtWeight) continue;
      form.weights.push_back(weight);
      form.a_index.push_back(i);
      betas.push_back(w.row(i).transpose() / std::sqrt(weight));
    }
    form.rank = static_cast<int>(form.weights.size());
    form.basis_a = ComplexMatrix::Zero(dim_a, form.rank);
    form.basis_b.resize(dim_b, form.rank);
    for (int k = 0; k < form.rank; ++k) {
      form.basis_a(form.a_index[static_cast<std::size_t>(k)], k) = 1.0;
      form.basis_b.col(k) = betas[static_cast<std::size_t>(k)];
    }
  } else {
    // W = U S V^dagger gives |psi> = sum_k s_k |u_k> (x) conj(v_k).
    const SvdResult dec = svd(w);
    std::vector<Eigen::Index> keep;
    for (std::size_t k = 0; k < dec.s.size(); ++k) {
      const double weight = dec.s[k] * dec.s[k];
      if (weight <= tolerance::kSchmidtWeight) continue;
      form.weights.push_back(weight);
      keep.push_back(static_cast<Eigen::Index>(k));
    }
    form.rank = static_cast<int>(keep.size());
    form.basis_a.resize(dim_a, form.rank);
    form.basis_b.resize(dim_b, form.rank);
    for (int k = 0; k < form.rank; ++k) {
      form.basis_a.col(k) = dec.u.col(keep[static_cast<std::size_t>(k)]);
      form.basis_b.col(k) = dec.v.col(keep[static_cast<std::size_t>(k)]).conjugate();
    }
  }
  const double total = std::accumulate(form.weights.begin(), form.weights.end(), 0.0);
  for (double& weight : form.weights) weight /= total;
  return form;
}

}  // namespace

DensityMatrix DensityMatrix::from_computed(const ComplexMatrix& m) {
  ComplexMatrix h = 0.5 * (m + m.adjoint());
  const double tr = h.trace().real();
  if (!(tr > 0.0) || !std::isfinite(tr)) {
    throw Error(ErrorCode::BadTrace,
                "density matrix: non-positive trace " + fmt_double(tr));
  }
  h /= tr;
  return DensityMatrix(std::move(h));
}

DensityMatrix validate_density(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch,
                "density matrix: expected a non-empty square matrix");
  }
  if (!all_finite(m)) {
    throw Error(ErrorCode::InvalidArgument, "density matrix: non-finite entries");
  }
  const double herm_dev = max_abs(m - m.adjoint());
  if (herm_dev > tolerance::kValidity) {
    throw Error(ErrorCode::NotHermitian,
                "NotHermitian: max |m - m^dagger| = " + fmt_double(herm_dev));
  }
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  const double min_eig = hermitian_eig(h).values.back();
  if (min_eig < -tolerance::kValidity) {
    throw Error(ErrorCode::NotPositive,
                "NotPositive: minimum eigenvalue " + fmt_double(min_eig));
  }
  const double tr = h.trace().real();
  if (std::abs(tr - 1.0) >= tolerance::kValidity) {
    throw Error(ErrorCode::BadTrace, "BadTrace: trace " + fmt_double(tr));
  }
  return DensityMatrix(h / tr);
}

BipartitePureState::BipartitePureState(int dim_a, int dim_b, ComplexVector amplitudes)
    : dim_a_(dim_a), dim_b_(dim_b), amplitudes_(std::move(amplitudes)) {
  if (dim_a < 1 || dim_b < 1) {
    throw Error(ErrorCode::InvalidArgument, "pure state: dimensions must be >= 1");
  }
  if (amplitudes_.size() != static_cast<Eigen::Index>(dim_a) * dim_b) {
    throw Error(ErrorCode::DimensionMismatch,
                "pure state: expected " + std::to_string(dim_a * dim_b) +
                    " amplitudes, got " + std::to_string(amplitudes_.size()));
  }
  if (!all_finite(amplitudes_)) {
    throw Error(ErrorCode::InvalidArgument, "pure state: non-finite amplitudes");
  }
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > tolerance::kValidity) {
    throw Error(ErrorCode::BadTrace,
                "pure state: amplitude norm " + fmt_double(norm) + " is not 1");
  }
  amplitudes_ /= norm;
  schmidt_ = decompose(coefficients());
}

BipartitePureState BipartitePureState::from_schmidt(std::span<const double> weights,
                                                    const ComplexMatrix& basis_b) {
  const int dim_a = static_cast<int>(weights.size());
  const int dim_b = static_cast<int>(basis_b.rows());
  if (basis_b.cols() != dim_a) {
    throw Error(ErrorCode::DimensionMismatch,
                "from_schmidt: need one B vector per weight");
  }
  ComplexVector amps = ComplexVector::Zero(static_cast<Eigen::Index>(dim_a) * dim_b);
  for (int i = 0; i < dim_a; ++i) {
    if (weights[static_cast<std::size_t>(i)] < 0.0) {
      throw Error(ErrorCode::InvalidArgument, "from_schmidt: negative weight");
    }
    amps.segment(static_cast<Eigen::Index>(i) * dim_b, dim_b) =
        std::sqrt(weights[static_cast<std::size_t>(i)]) * basis_b.col(i);
  }
  return BipartitePureState(dim_a, dim_b, std::move(amps));
}

ComplexMatrix BipartitePureState::coefficients() const {
  ComplexMatrix w(dim_a_, dim_b_);
  for (int i = 0; i < dim_a_; ++i) {
    for (int j = 0; j < dim_b_; ++j) w(i, j) = amplitudes_(i * dim_b_ + j);
  }
  return w;
}

SchmidtForm schmidt_decompose(const BipartitePureState& psi) { return psi.schmidt(); }

SchmidtFrame schmidt_frame(const BipartitePureState& psi) {
  const int dim_a = psi.dim_a();
  const int dim_b = psi.dim_b();
  if (dim_b < dim_a) {
    throw Error(ErrorCode::DimensionMismatch,
                "schmidt frame: dim_b (" + std::to_string(dim_b) +
                    ") is smaller than dim_a (" + std::to_string(dim_a) + ")");
  }
  const SchmidtForm& form = psi.schmidt();
  const ComplexMatrix full_b = complete_basis(form.basis_b, dim_b);
  SchmidtFrame frame;
  frame.b.resize(dim_b, dim_a);
  if (form.computational_a) {
    frame.a = ComplexMatrix::Identity(dim_a, dim_a);
    std::vector<bool> used(static_cast<std::size_t>(dim_a), false);
    for (int k = 0; k < form.rank; ++k) {
      const int i = form.a_index[static_cast<std::size_t>(k)];
      frame.b.col(i) = form.basis_b.col(k);
      used[static_cast<std::size_t>(i)] = true;
    }
    Eigen::Index next = form.rank;
    for (int i = 0; i < dim_a; ++i) {
      if (!used[static_cast<std::size_t>(i)]) frame.b.col(i) = full_b.col(next++);
    }
  } else {
    frame.a = complete_basis(form.basis_a, dim_a);
    frame.b = full_b.leftCols(dim_a);
  }
  return frame;
}

double concurrence(const BipartitePureState& psi) {
  const auto& w = psi.schmidt().weights;
  double cross = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (i != j) cross += w[i] * w[j];
    }
  }
  return std::sqrt(2.0 * cross);
}

DensityMatrix reduced_a(const BipartitePureState& psi) {
  const ComplexMatrix w = psi.coefficients();
  return DensityMatrix::from_computed(w * w.adjoint());
}

DensityMatrix reduced_a(const DensityMatrix& rho_ab, int dim_a, int dim_b) {
  return DensityMatrix::from_computed(
      partial_trace(rho_ab.matrix(), dim_a, dim_b, Subsystem::A));
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

}  // namespace rcc
