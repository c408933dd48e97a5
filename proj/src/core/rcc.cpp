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

#include "core/rcc.hpp"

#include <cmath>
#include <cstring>
#include <string>

#include "core/coherence.hpp"
#include "core/errors.hpp"

namespace rcc {

namespace {

void require_dims(const BipartitePureState& psi, int dim_b, const char* where) {
  if (psi.dim_b() != dim_b) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(where) + ": operation acts on dim " + std::to_string(dim_b) +
                    " but the state has dim_b " + std::to_string(psi.dim_b()));
  }
}

void require_premise(const BipartitePureState& psi) {
  const DensityMatrix rho_a = reduced_a(psi);
  if (!is_incoherent(rho_a)) {
    throw Error(ErrorCode::PremiseViolated,
                "PremiseViolated: initial A-marginal has l1 coherence " +
                    std::to_string(l1_coherence(rho_a)));
  }
}

void require_probability(double p) {
  if (!(p >= tolerance::kZeroProbability)) {
    throw Error(ErrorCode::ZeroProbability,
                "ZeroProbability: outcome probability " + std::to_string(p));
  }
}

// N expressed in the Schmidt B vectors: out(j, i) = <beta_j|N|beta_i>.
ComplexMatrix n_in_schmidt_basis(const SchmidtForm& form, const ComplexMatrix& n) {
  return form.basis_b.adjoint() * n * form.basis_b;
}

double upper_offdiag_norm(const ComplexMatrix& m) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < i; ++j) sum += std::norm(m(j, i));
  }
  return std::sqrt(sum);
}

struct Branch {
  ComplexMatrix unnormalized;  // p' rho_A'
  double probability;
};

Branch schmidt_branch(const SchmidtForm& form, const ComplexMatrix& n) {
  const ComplexMatrix nb = n_in_schmidt_basis(form, n);
  ComplexMatrix m(form.rank, form.rank);
  double p = 0.0;
  for (int i = 0; i < form.rank; ++i) {
    const double wi = form.weights[static_cast<std::size_t>(i)];
    p += wi * nb(i, i).real();
    for (int j = 0; j < form.rank; ++j) {
      m(i, j) = std::sqrt(wi * form.weights[static_cast<std::size_t>(j)]) * nb(j, i);
    }
  }
  return {form.basis_a * m * form.basis_a.adjoint(), p};
}

double average_over(const BipartitePureState& psi, const std::vector<KrausOperation>& branches) {
  double total = 0.0;
  for (const auto& op : branches) {
    const Branch b = schmidt_branch(psi.schmidt(), op.n_operator());
    if (b.probability >= tolerance::kZeroProbability) total += l1_coherence(b.unnormalized);
  }
  return total;
}

double tighter_over(const BipartitePureState& psi, const std::vector<KrausOperation>& branches) {
  double sum = 0.0;
  for (const auto& op : branches) {
    sum += upper_offdiag_norm(n_in_schmidt_basis(psi.schmidt(), op.n_operator()));
  }
  return concurrence(psi) * sum;
}

std::uint64_t fnv1a(const ComplexMatrix& m) {
  std::uint64_t h = 1469598103934665603ULL;
  const auto* bytes = reinterpret_cast<const unsigned char*>(m.data());
  const std::size_t n = static_cast<std::size_t>(m.size()) * sizeof(Complex);
  for (std::size_t k = 0; k < n; ++k) {
    h ^= bytes[k];
    h *= 1099511628211ULL;
  }
  return h;
}

// Structured projector directions: e_j, then (e_j + c e_l)/sqrt(2) for
// c in {1, -1, i, -i}.
std::vector<ComplexVector> structured_directions(int dim) {
  std::vector<ComplexVector> out;
  for (int j = 0; j < dim; ++j) out.push_back(ComplexVector::Unit(dim, j));
  const Complex phases[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (int j = 0; j < dim; ++j) {
    for (int l = j + 1; l < dim; ++l) {
      for (const Complex c : phases) {
        ComplexVector v = ComplexVector::Zero(dim);
        v(j) = M_SQRT1_2;
        v(l) = c * M_SQRT1_2;
        out.push_back(v);
      }
    }
  }
  return out;
}

// Unnormalized A-state after projecting B onto |beta>: (1 (x) <beta|) rho (1 (x) |beta>).
ComplexMatrix projected_a(const ComplexMatrix& rho, int dim_a, int dim_b,
                          const ComplexVector& beta) {
  ComplexMatrix out(dim_a, dim_a);
  for (int i = 0; i < dim_a; ++i) {
    for (int k = 0; k < dim_a; ++k) {
      out(i, k) = beta.dot(rho.block(i * dim_b, k * dim_b, dim_b, dim_b) * beta);
    }
  }
  return out;
}

constexpr std::uint64_t kSearchSeed = 0x5eed'c0de'2017'0001ULL;

}  // namespace

ComplexMatrix unnormalized_post_state_a(const ComplexMatrix& rho_ab, int dim_a, int dim_b,
                                        const KrausOperation& op) {
  if (op.dim_b() != dim_b) {
    throw Error(ErrorCode::DimensionMismatch, "post_operation_state_a: operation acts on dim " +
                                                  std::to_string(op.dim_b()) +
                                                  ", expected " + std::to_string(dim_b));
  }
  if (rho_ab.rows() != static_cast<Eigen::Index>(dim_a) * dim_b || rho_ab.cols() != rho_ab.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "post_operation_state_a: state side " +
                                                  std::to_string(rho_ab.rows()) +
                                                  " does not equal dim_a*dim_b");
  }
  const ComplexMatrix id_a = ComplexMatrix::Identity(dim_a, dim_a);
  ComplexMatrix evolved = ComplexMatrix::Zero(rho_ab.rows(), rho_ab.cols());
  for (const auto& f : op.kraus()) {
    const ComplexMatrix lifted = tensor_product(id_a, f);
    evolved += lifted * rho_ab * lifted.adjoint();
  }
  return partial_trace(evolved, dim_a, dim_b, Subsystem::A);
}

PostState post_operation_state_a(const DensityMatrix& rho_ab, int dim_a, int dim_b,
                                 const KrausOperation& op) {
  const ComplexMatrix out = unnormalized_post_state_a(rho_ab.matrix(), dim_a, dim_b, op);
  const double p = out.trace().real();
  require_probability(p);
  return {DensityMatrix::from_computed(out), p};
}

PostState post_operation_state_a(const BipartitePureState& psi, const KrausOperation& op) {
  require_dims(psi, op.dim_b(), "post_operation_state_a");
  const Branch b = schmidt_branch(psi.schmidt(), op.n_operator());
  require_probability(b.probability);
  return {DensityMatrix::from_computed(b.unnormalized), b.probability};
}

PostState post_operation_state_a_generic(const BipartitePureState& psi,
                                         const KrausOperation& op) {
  require_dims(psi, op.dim_b(), "post_operation_state_a");
  const ComplexMatrix w = psi.coefficients();
  ComplexMatrix out = ComplexMatrix::Zero(psi.dim_a(), psi.dim_a());
  for (const auto& f : op.kraus()) {
    // (1 (x) F)|psi> has coefficient matrix W F^T.
    const ComplexMatrix wf = w * f.transpose();
    out += wf * wf.adjoint();
  }
  const double p = out.trace().real();
  require_probability(p);
  return {DensityMatrix::from_computed(out), p};
}

RccReport average_rcc(const BipartitePureState& psi, const Channel& channel) {
  require_dims(psi, channel_dim_b(channel), "average_rcc");
  require_premise(psi);
  const std::vector<KrausOperation> branches = outcome_branches(channel);

  RccReport report;
  report.dim_a = psi.dim_a();
  report.dim_b = psi.dim_b();
  report.entanglement = concurrence(psi);
  const SchmidtForm& form = psi.schmidt();
  for (const auto& op : branches) {
    OutcomeRecord rec;
    rec.label = op.label();
    const Branch b = schmidt_branch(form, op.n_operator());
    rec.probability = std::max(0.0, b.probability);
    if (b.probability < tolerance::kZeroProbability) {
      rec.zero_probability = true;
    } else {
      rec.state_a = DensityMatrix::from_computed(b.unnormalized);
      rec.coherence = l1_coherence(*rec.state_a);
      rec.lemma1_bound = report.entanglement / b.probability *
                         upper_offdiag_norm(n_in_schmidt_basis(form, op.n_operator()));
      report.average_rcc += rec.probability * rec.coherence;
    }
    report.outcomes.push_back(std::move(rec));
  }
  report.tighter_bound = tighter_over(psi, branches);
  if (psi.dim_b() >= psi.dim_a()) {
    const BipartitePureState partner = maximally_entangled_partner(psi);
    const double maxent = average_over(partner, branches);
    report.maxent_average_rcc = maxent;
    report.theorem3_bound = 0.5 * psi.dim_a() * report.entanglement * maxent;
    if (psi.dim_a() == 2 && psi.dim_b() == 2) {
      if (maxent > 1e-12) {
        report.factorization_ratio = report.average_rcc / maxent;
        report.factorization_holds =
            std::abs(report.average_rcc - report.entanglement * maxent) < 1e-9;
      } else {
        report.factorization_holds = report.average_rcc < 1e-9;
      }
    }
  }
  return report;
}

double lemma1_bound(const BipartitePureState& psi, const KrausOperation& op) {
  require_dims(psi, op.dim_b(), "lemma1_bound");
  const Branch b = schmidt_branch(psi.schmidt(), op.n_operator());
  require_probability(b.probability);
  return concurrence(psi) / b.probability *
         upper_offdiag_norm(n_in_schmidt_basis(psi.schmidt(), op.n_operator()));
}

BipartitePureState maximally_entangled_partner(const BipartitePureState& psi) {
  const SchmidtFrame frame = schmidt_frame(psi);
  const int d = psi.dim_a();
  ComplexVector amps = ComplexVector::Zero(static_cast<Eigen::Index>(d) * psi.dim_b());
  for (int i = 0; i < d; ++i) {
    amps += kron(frame.a.col(i), frame.b.col(i)) / std::sqrt(static_cast<double>(d));
  }
  return BipartitePureState(d, psi.dim_b(), std::move(amps));
}

double theorem3_bound(const BipartitePureState& psi, const Channel& channel) {
  require_dims(psi, channel_dim_b(channel), "theorem3_bound");
  require_premise(psi);
  const auto branches = outcome_branches(channel);
  const double maxent = average_over(maximally_entangled_partner(psi), branches);
  return 0.5 * psi.dim_a() * concurrence(psi) * maxent;
}

double tighter_bound(const BipartitePureState& psi, const Channel& channel) {
  require_dims(psi, channel_dim_b(channel), "tighter_bound");
  require_premise(psi);
  return tighter_over(psi, outcome_branches(channel));
}

FactorizationResult factorization_check(const BipartitePureState& psi, const Channel& channel) {
  if (psi.dim_a() != 2 || psi.dim_b() != 2) {
    throw Error(ErrorCode::WrongDimension, "factorization_check: requires a 2x2 system, got " +
                                               std::to_string(psi.dim_a()) + "x" +
                                               std::to_string(psi.dim_b()));
  }
  require_dims(psi, channel_dim_b(channel), "factorization_check");
  require_premise(psi);
  const auto branches = outcome_branches(channel);
  FactorizationResult out;
  out.average_rcc = average_over(psi, branches);
  out.maxent_average_rcc = average_over(maximally_entangled_partner(psi), branches);
  out.entanglement = concurrence(psi);
  if (out.maxent_average_rcc > 1e-12) {
    out.ratio = out.average_rcc / out.maxent_average_rcc;
    out.holds = std::abs(out.average_rcc - out.entanglement * out.maxent_average_rcc) < 1e-9;
  } else {
    out.holds = out.average_rcc < 1e-9;
  }
  return out;
}

std::optional<CreatingOperation> find_creating_operation(const DensityMatrix& rho_ab, int dim_a,
                                                         int dim_b) {
  if (is_incoherent_quantum(rho_ab, dim_a, dim_b)) return std::nullopt;
  const ComplexMatrix& rho = rho_ab.matrix();

  double best = -1.0;
  ComplexVector best_dir;
  auto consider = [&](const ComplexVector& beta) {
    const ComplexMatrix m = projected_a(rho, dim_a, dim_b, beta);
    const double p = m.trace().real();
    if (p < tolerance::kZeroProbability) return;
    const double c = l1_coherence(m) / p;
    if (c > best) {
      best = c;
      best_dir = beta;
    }
  };
  for (const auto& dir : structured_directions(dim_b)) consider(dir);
  SeededRng rng(kSearchSeed, fnv1a(rho));
  for (int attempt = 0; attempt < kCreatingSearchBudget; ++attempt) {
    consider(random_pure_state(dim_b, rng));
  }
  if (best <= kCreatingThreshold) {
    throw SearchExhausted("SearchExhausted: best coherence " + std::to_string(std::max(best, 0.0)) +
                              " after " + std::to_string(kCreatingSearchBudget) +
                              " random projectors",
                          std::max(best, 0.0));
  }
  return CreatingOperation{
      KrausOperation(dim_b, {best_dir * best_dir.adjoint()}, "creating_projector"), best};
}

}  // namespace rcc
