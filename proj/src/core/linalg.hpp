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

#ifndef RCC_CORE_LINALG_HPP
#define RCC_CORE_LINALG_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace rcc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

enum class Subsystem { A, B };

namespace tolerance {
/// Absolute tolerance for validity checks (Hermiticity, unitarity, trace).
inline constexpr double kValidity = 1e-9;
/// Schmidt weights at or below this are dropped.
inline constexpr double kSchmidtWeight = 1e-12;
/// Post-selection probabilities below this have no normalized state.
inline constexpr double kZeroProbability = 1e-14;
}  // namespace tolerance

/// Kronecker product; block (i, k) of the result equals a(i, k) * b.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced operator of a square (dim_a*dim_b)-sided matrix on the kept
/// subsystem. Index convention: row = i * dim_b + j for |i>_A |j>_B.
ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_a, int dim_b,
                            Subsystem keep);

struct SvdResult {
  ComplexMatrix u;
  std::vector<double> s;  // descending
  ComplexMatrix v;        // m = u * diag(s) * v^dagger
};

/// Thin SVD with singular values sorted descending. Each left singular
/// vector is rotated so its largest-modulus entry (lowest row on ties) is real
/// positive; the matching right vector absorbs the same phase.
SvdResult svd(const ComplexMatrix& m);

struct EigResult {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

/// Spectral decomposition of a Hermitian matrix, same phase convention as svd.
EigResult hermitian_eig(const ComplexMatrix& m);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Principal square root of a PSD matrix; negative eigenvalues are clipped.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

double max_abs(const ComplexMatrix& m);
bool all_finite(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = tolerance::kValidity);
bool is_unitary(const ComplexMatrix& m, double tol = tolerance::kValidity);

/// Rotates the global phase of v so that its largest-modulus entry is real
/// positive (first index on ties). Zero vectors are left untouched.
void fix_phase(Eigen::Ref<ComplexVector> v);

/// Extends the given orthonormal columns to a full orthonormal basis of
/// C^dim by Gram-Schmidt against e_0, e_1, ... in order.
ComplexMatrix complete_basis(const ComplexMatrix& columns, int dim);

/// Deterministic random source: identical (seed, stream_id) pairs produce
/// identical sample sequences.
class SeededRng {
 public:
  SeededRng(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  double uniform();           // [0, 1)
  double normal();            // N(0, 1)
  Complex complex_normal();   // E|z|^2 = 1
  std::uint64_t below(std::uint64_t n);  // uniform in [0, n)

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

/// Matrix of i.i.d. standard complex normals.
ComplexMatrix ginibre(int rows, int cols, SeededRng& rng);

/// Haar-distributed unitary: Ginibre -> QR -> columns of Q rescaled by the
/// phases of R's diagonal.
ComplexMatrix haar_random_unitary(int d, SeededRng& rng);

/// Uniformly distributed unit vector in C^d.
ComplexVector random_pure_state(int d, SeededRng& rng);

}  // namespace rcc

#endif  // RCC_CORE_LINALG_HPP
