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

#include "core/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "core/errors.hpp"

namespace rcc {

namespace {

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!all_finite(m)) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + ": matrix has non-finite entries");
  }
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": expected a square matrix, got " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

}  // namespace

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  constexpr auto kMax = std::numeric_limits<Eigen::Index>::max();
  const auto rows_ok = a.rows() == 0 || b.rows() <= kMax / a.rows();
  const auto cols_ok = a.cols() == 0 || b.cols() <= kMax / a.cols();
  if (!rows_ok || !cols_ok ||
      (a.rows() * b.rows() != 0 &&
       a.cols() * b.cols() > kMax / (a.rows() * b.rows()))) {
    throw Error(ErrorCode::DimensionMismatch,
                "tensor_product: result dimensions overflow");
  }
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_a, int dim_b,
                            Subsystem keep) {
  require_square(m, "partial_trace");
  if (dim_a < 1 || dim_b < 1 ||
      m.rows() != static_cast<Eigen::Index>(dim_a) * dim_b) {
    throw Error(ErrorCode::DimensionMismatch,
                "partial_trace: side " + std::to_string(m.rows()) +
                    " does not equal dim_a*dim_b = " + std::to_string(dim_a) +
                    "*" + std::to_string(dim_b));
  }
  if (keep == Subsystem::A) {
    ComplexMatrix out = ComplexMatrix::Zero(dim_a, dim_a);
    for (int i = 0; i < dim_a; ++i) {
      for (int k = 0; k < dim_a; ++k) {
        out(i, k) = m.block(i * dim_b, k * dim_b, dim_b, dim_b).trace();
      }
    }
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
  for (int i = 0; i < dim_a; ++i) {
    out += m.block(i * dim_b, i * dim_b, dim_b, dim_b);
  }
  return out;
}

void fix_phase(Eigen::Ref<ComplexVector> v) {
  Eigen::Index best = -1;
  double best_mod = 0.0;
  for (Eigen::Index r = 0; r < v.size(); ++r) {
    const double mod = std::abs(v(r));
    // Strictly greater beyond round-off keeps the lowest row on ties.
    if (mod > best_mod + 1e-12) {
      best_mod = mod;
      best = r;
    }
  }
  if (best < 0) return;
  v *= std::conj(v(best)) / best_mod;
  v(best) = Complex(std::abs(v(best)), 0.0);
}

SvdResult svd(const ComplexMatrix& m) {
  require_finite(m, "svd");
  Eigen::JacobiSVD<ComplexMatrix> solver(m,
                                         Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NotConverged, "svd: iteration did not converge");
  }
  SvdResult out;
  out.u = solver.matrixU();
  out.v = solver.matrixV();
  const auto& sv = solver.singularValues();
  out.s.assign(sv.data(), sv.data() + sv.size());
  for (Eigen::Index k = 0; k < out.u.cols(); ++k) {
    if (out.s[static_cast<std::size_t>(k)] > 0.0) {
      const ComplexVector before = out.u.col(k);
      fix_phase(out.u.col(k));
      // u_k -> u_k e^{i t} requires v_k -> v_k e^{i t} to keep u s v^dagger.
      Eigen::Index r = 0;
      out.u.col(k).cwiseAbs().maxCoeff(&r);
      const Complex rot = out.u(r, k) / before(r);
      out.v.col(k) *= rot / std::abs(rot);
    } else {
      fix_phase(out.u.col(k));
      fix_phase(out.v.col(k));
    }
  }
  return out;
}

EigResult hermitian_eig(const ComplexMatrix& m) {
  require_square(m, "hermitian_eig");
  require_finite(m, "hermitian_eig");
  if (!is_hermitian(m)) {
    const double dev = max_abs(m - m.adjoint());
    throw Error(ErrorCode::NotHermitian,
                "hermitian_eig: matrix deviates from Hermitian by " +
                    std::to_string(dev));
  }
  const ComplexMatrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NotConverged,
                "hermitian_eig: iteration did not converge");
  }
  const auto n = herm.rows();
  EigResult out;
  out.values.resize(static_cast<std::size_t>(n));
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto src = n - 1 - k;  // Eigen sorts ascending
    out.values[static_cast<std::size_t>(k)] = solver.eigenvalues()(src);
    out.vectors.col(k) = solver.eigenvectors().col(src);
    fix_phase(out.vectors.col(k));
  }
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "commutator");
  require_square(b, "commutator");
  if (a.rows() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                "commutator: operands have sides " + std::to_string(a.rows()) +
                    " and " + std::to_string(b.rows()));
  }
  return a * b - b * a;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  const EigResult eig = hermitian_eig(m);
  Eigen::VectorXd roots(static_cast<Eigen::Index>(eig.values.size()));
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    roots(static_cast<Eigen::Index>(k)) = std::sqrt(std::max(0.0, eig.values[k]));
  }
  return eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index k = 0; k < m.size(); ++k) {
    const Complex z = m.data()[k];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() &&
         max_abs(m * m.adjoint() - ComplexMatrix::Identity(m.rows(), m.cols())) <=
             tol;
}

ComplexMatrix complete_basis(const ComplexMatrix& columns, int dim) {
  if (columns.rows() != dim || columns.cols() > dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "complete_basis: columns do not fit in dimension " +
                    std::to_string(dim));
  }
  ComplexMatrix out(dim, dim);
  Eigen::Index filled = columns.cols();
  out.leftCols(filled) = columns;
  for (int e = 0; e < dim && filled < dim; ++e) {
    ComplexVector v = ComplexVector::Unit(dim, e);
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index c = 0; c < filled; ++c) {
        v -= out.col(c) * out.col(c).dot(v);
      }
    }
    const double norm = v.norm();
    if (norm > 1e-6) {
      out.col(filled++) = v / norm;
    }
  }
  return out;
}

SeededRng::SeededRng(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream_id),
                    static_cast<std::uint32_t>(stream_id >> 32)};
  engine_.seed(seq);
}

double SeededRng::uniform() {
  return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
}

double SeededRng::normal() {
  return std::normal_distribution<double>(0.0, 1.0)(engine_);
}

Complex SeededRng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) * M_SQRT1_2;
}

std::uint64_t SeededRng::below(std::uint64_t n) {
  return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_);
}

ComplexMatrix ginibre(int rows, int cols, SeededRng& rng) {
  ComplexMatrix g(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) g(r, c) = rng.complex_normal();
  }
  return g;
}

ComplexMatrix haar_random_unitary(int d, SeededRng& rng) {
  if (d < 1) {
    throw Error(ErrorCode::InvalidArgument, "haar_random_unitary: d must be >= 1");
  }
  const ComplexMatrix g = ginibre(d, d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, d);
  const ComplexMatrix& r = qr.matrixQR();
  for (int j = 0; j < d; ++j) {
    const double mod = std::abs(r(j, j));
    if (mod > 0.0) q.col(j) *= r(j, j) / mod;
  }
  return q;
}

ComplexVector random_pure_state(int d, SeededRng& rng) {
  if (d < 1) {
    throw Error(ErrorCode::InvalidArgument, "random_pure_state: d must be >= 1");
  }
  ComplexVector v = ginibre(d, 1, rng).col(0);
  double norm = v.norm();
  while (norm == 0.0) {
    v = ginibre(d, 1, rng).col(0);
    norm = v.norm();
  }
  return v / norm;
}

}  // namespace rcc
