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

#include "core/channel.hpp"

#include <cmath>
#include <string>

#include "core/coherence.hpp"
#include "core/errors.hpp"

namespace rcc {

namespace {

void require_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(name) + ": parameter " + std::to_string(p) +
                    " is outside [0, 1]");
  }
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

KrausOperation pauli_mixture(double p, const ComplexMatrix& pauli, const char* label) {
  require_probability(p, label);
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  return KrausOperation(2, {std::sqrt(1.0 - p) * id, std::sqrt(p) * pauli}, label);
}

}  // namespace

KrausOperation::KrausOperation(int dim_b, std::vector<ComplexMatrix> kraus, std::string label)
    : dim_b_(dim_b), kraus_(std::move(kraus)), label_(std::move(label)) {
  if (dim_b < 1) throw Error(ErrorCode::InvalidArgument, "kraus operation: dim_b must be >= 1");
  if (kraus_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "kraus operation: at least one operator required");
  }
  n_ = ComplexMatrix::Zero(dim_b, dim_b);
  for (std::size_t n = 0; n < kraus_.size(); ++n) {
    const auto& f = kraus_[n];
    if (f.rows() != dim_b || f.cols() != dim_b) {
      throw Error(ErrorCode::DimensionMismatch,
                  "kraus operation: operator " + std::to_string(n) + " is " +
                      std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                      ", expected " + std::to_string(dim_b) + "x" + std::to_string(dim_b));
    }
    if (!all_finite(f)) {
      throw Error(ErrorCode::InvalidArgument,
                  "kraus operation: operator " + std::to_string(n) + " has non-finite entries");
    }
    n_ += f.adjoint() * f;
  }
  n_ = 0.5 * (n_ + n_.adjoint());
  const EigResult eig = hermitian_eig(n_);
  if (eig.values.front() > 1.0 + tolerance::kValidity) {
    throw Error(ErrorCode::InvalidArgument,
                "kraus operation: N = sum F^dagger F exceeds the identity (largest eigenvalue " +
                    std::to_string(eig.values.front()) + ")");
  }
}

ChannelEnsemble::ChannelEnsemble(std::vector<KrausOperation> operations)
    : operations_(std::move(operations)) {
  if (operations_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "channel ensemble: no operations");
  }
  const int dim_b = operations_.front().dim_b();
  ComplexMatrix total = ComplexMatrix::Zero(dim_b, dim_b);
  for (const auto& op : operations_) {
    if (op.dim_b() != dim_b) {
      throw Error(ErrorCode::DimensionMismatch, "channel ensemble: operations disagree on dim_b");
    }
    total += op.n_operator();
  }
  const double dev = max_abs(total - ComplexMatrix::Identity(dim_b, dim_b));
  if (dev >= tolerance::kValidity) {
    throw Error(ErrorCode::NotTracePreserving,
                "channel ensemble: sum_k N_k deviates from the identity by " +
                    std::to_string(dev));
  }
}

ComplexMatrix n_operator(const KrausOperation& op) { return op.n_operator(); }

bool is_trace_preserving(const KrausOperation& op, double tol) {
  return max_abs(op.n_operator() - ComplexMatrix::Identity(op.dim_b(), op.dim_b())) < tol;
}

int channel_dim_b(const Channel& channel) {
  return std::visit([](const auto& c) { return c.dim_b(); }, channel);
}

std::vector<KrausOperation> outcome_branches(const Channel& channel) {
  if (const auto* ensemble = std::get_if<ChannelEnsemble>(&channel)) {
    return ensemble->operations();
  }
  const auto& op = std::get<KrausOperation>(channel);
  if (!is_trace_preserving(op)) {
    throw Error(ErrorCode::NotTracePreserving,
                "operation '" + op.label() + "' is not trace preserving: max |N - 1| = " +
                    std::to_string(max_abs(op.n_operator() -
                                           ComplexMatrix::Identity(op.dim_b(), op.dim_b()))));
  }
  std::vector<KrausOperation> branches;
  branches.reserve(op.kraus().size());
  for (std::size_t n = 0; n < op.kraus().size(); ++n) {
    branches.emplace_back(op.dim_b(), std::vector<ComplexMatrix>{op.kraus()[n]},
                          op.label() + "[" + std::to_string(n) + "]");
  }
  return branches;
}

KrausOperation phase_damping(double r) {
  require_probability(r, "phase_damping");
  ComplexMatrix f1 = ComplexMatrix::Zero(2, 2);
  f1(0, 0) = 1.0;
  f1(1, 1) = std::sqrt(1.0 - r);
  ComplexMatrix f2 = ComplexMatrix::Zero(2, 2);
  f2(1, 1) = std::sqrt(r);
  return KrausOperation(2, {f1, f2}, "phase_damping");
}

KrausOperation depolarizing(double p) {
  require_probability(p, "depolarizing");
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  const double side = std::sqrt(p / 4.0);
  return KrausOperation(2,
                        {std::sqrt(1.0 - 0.75 * p) * id, side * pauli_x(), side * pauli_y(),
                         side * pauli_z()},
                        "depolarizing");
}

KrausOperation bit_flip(double p) { return pauli_mixture(p, pauli_x(), "bit_flip"); }
KrausOperation phase_flip(double p) { return pauli_mixture(p, pauli_z(), "phase_flip"); }
KrausOperation bit_phase_flip(double p) { return pauli_mixture(p, pauli_y(), "bit_phase_flip"); }

ChannelEnsemble projective_measurement(const ComplexMatrix& basis) {
  if (basis.rows() != basis.cols() || basis.rows() == 0 || !all_finite(basis)) {
    throw Error(ErrorCode::InvalidArgument, "projective_measurement: basis must be square");
  }
  if (!is_unitary(basis.adjoint())) {
    throw Error(ErrorCode::InvalidArgument, "projective_measurement: basis is not orthonormal");
  }
  const int dim = static_cast<int>(basis.rows());
  std::vector<KrausOperation> ops;
  for (int k = 0; k < dim; ++k) {
    ops.emplace_back(dim, std::vector<ComplexMatrix>{basis.col(k) * basis.col(k).adjoint()},
                     "projector[" + std::to_string(k) + "]");
  }
  return ChannelEnsemble(std::move(ops));
}

Theorem2Verdict theorem2_predicate(const BipartitePureState& psi, const KrausOperation& op,
                                   double tol) {
  if (op.dim_b() != psi.dim_b()) {
    throw Error(ErrorCode::DimensionMismatch, "theorem2_predicate: operation acts on dim " +
                                                  std::to_string(op.dim_b()) +
                                                  ", state has dim_b " +
                                                  std::to_string(psi.dim_b()));
  }
  if (!is_incoherent(reduced_a(psi), tol)) {
    throw Error(ErrorCode::PremiseViolated,
                "PremiseViolated: the A-marginal has coherence " +
                    std::to_string(l1_coherence(reduced_a(psi))));
  }
  const ComplexMatrix w = psi.coefficients();
  for (int i = 0; i < psi.dim_a(); ++i) {
    // (<i| (x) 1)|psi> is row i of W; its projector is unnormalized.
    const ComplexVector branch = w.row(i).transpose();
    const ComplexMatrix proj = branch * branch.adjoint();
    if (commutator(op.n_operator(), proj).norm() > tol) return {true, i};
  }
  return {false, std::nullopt};
}

KrausOperation inert_operation(const BipartitePureState& psi, std::span<const double> n_values) {
  const SchmidtForm& form = psi.schmidt();
  if (static_cast<int>(n_values.size()) < form.rank ||
      static_cast<int>(n_values.size()) > psi.dim_b()) {
    throw Error(ErrorCode::InvalidArgument,
                "inert_operation: need between " + std::to_string(form.rank) + " and " +
                    std::to_string(psi.dim_b()) + " values, got " +
                    std::to_string(n_values.size()));
  }
  for (double n : n_values) require_probability(n, "inert_operation");
  const ComplexMatrix ordered =
      psi.dim_b() >= psi.dim_a() ? schmidt_frame(psi).b : form.basis_b;
  const ComplexMatrix basis = complete_basis(ordered, psi.dim_b());
  ComplexMatrix n_op = ComplexMatrix::Zero(psi.dim_b(), psi.dim_b());
  for (std::size_t k = 0; k < n_values.size(); ++k) {
    const auto col = basis.col(static_cast<Eigen::Index>(k));
    n_op += n_values[k] * col * col.adjoint();
  }
  return KrausOperation(psi.dim_b(), {psd_sqrt(n_op)}, "inert");
}

}  // namespace rcc
