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

#ifndef RCC_TESTS_SUPPORT_HPP
#define RCC_TESTS_SUPPORT_HPP

#include <gtest/gtest.h>

#include <cmath>
#include <initializer_list>
#include <vector>

#include "core/channel.hpp"
#include "core/errors.hpp"
#include "core/linalg.hpp"
#include "core/quantum_state.hpp"

namespace rcc::test {

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Row-major complex matrix literal.
inline ComplexMatrix mat(int rows, int cols, std::initializer_list<Complex> entries) {
  ComplexMatrix m(rows, cols);
  auto it = entries.begin();
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m(r, c) = *it++;
  }
  return m;
}

inline ComplexVector vec(std::initializer_list<Complex> entries) {
  ComplexVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index k = 0;
  for (const Complex& z : entries) v(k++) = z;
  return v;
}

inline ComplexMatrix pauli_x() { return mat(2, 2, {0, 1, 1, 0}); }

inline ComplexMatrix hadamard() {
  return mat(2, 2, {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2});
}

inline BipartitePureState bell() {
  return BipartitePureState(2, 2, vec({kInvSqrt2, 0, 0, kInvSqrt2}));
}

// sqrt(w0)|0>|+> + sqrt(w1)|1>|->
inline BipartitePureState hadamard_beta_state(double w0) {
  const double a = std::sqrt(w0) * kInvSqrt2;
  const double b = std::sqrt(1.0 - w0) * kInvSqrt2;
  return BipartitePureState(2, 2, vec({a, a, b, -b}));
}

template <typename F>
void expect_error(F&& body, ErrorCode code) {
  try {
    body();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

// Unnormalized A-state after op on B, element by element:
// rho'_ik = <b_k| N |b_i>, with |b_i> the i-th row of the coefficient matrix.
inline ComplexMatrix block_trace_oracle(const BipartitePureState& psi, const KrausOperation& op) {
  const int da = psi.dim_a();
  const int db = psi.dim_b();
  ComplexMatrix n = ComplexMatrix::Zero(db, db);
  for (const auto& f : op.kraus()) {
    for (int x = 0; x < db; ++x) {
      for (int y = 0; y < db; ++y) {
        for (int z = 0; z < db; ++z) n(x, y) += std::conj(f(z, x)) * f(z, y);
      }
    }
  }
  ComplexMatrix out = ComplexMatrix::Zero(da, da);
  for (int i = 0; i < da; ++i) {
    for (int k = 0; k < da; ++k) {
      for (int x = 0; x < db; ++x) {
        for (int y = 0; y < db; ++y) {
          out(i, k) += std::conj(psi.amplitudes()(k * db + x)) * n(x, y) *
                       psi.amplitudes()(i * db + y);
        }
      }
    }
  }
  return out;
}

// Unnormalized A-state after op on B for a mixed state, by explicit index sums.
inline ComplexMatrix mixed_oracle(const ComplexMatrix& rho, int da, int db,
                                  const KrausOperation& op) {
  ComplexMatrix out = ComplexMatrix::Zero(da, da);
  for (const auto& f : op.kraus()) {
    for (int i = 0; i < da; ++i) {
      for (int k = 0; k < da; ++k) {
        for (int m = 0; m < db; ++m) {
          for (int x = 0; x < db; ++x) {
            for (int y = 0; y < db; ++y) {
              out(i, k) += f(m, x) * rho(i * db + x, k * db + y) * std::conj(f(m, y));
            }
          }
        }
      }
    }
  }
  return out;
}

inline double oracle_l1(const ComplexMatrix& m) {
  double s = 0.0;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (i != j) s += std::abs(m(i, j));
    }
  }
  return s;
}

// Average coherence over the Kraus branches of a TP operation, straight from the oracle.
inline double oracle_average(const BipartitePureState& psi, const KrausOperation& channel) {
  double total = 0.0;
  for (const auto& f : channel.kraus()) {
    const KrausOperation branch(channel.dim_b(), {f});
    const ComplexMatrix m = block_trace_oracle(psi, branch);
    const double p = m.trace().real();
    if (p > 1e-14) total += oracle_l1(m);  // p * C(m / p)
  }
  return total;
}

}  // namespace rcc::test

#endif  // RCC_TESTS_SUPPORT_HPP
