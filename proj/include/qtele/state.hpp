// Copyright 2026 The qtele Authors
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

// Value types of the teleportation protocol.
//
// A qudit state is the amplitude row alpha, so that |phi> = sum_i alpha_i |i>.
// Two-party states are stored by coefficient matrix: the channel
// |phi>_23 = sum_jk a_jk |j>_2 |k>_3 is the matrix A, and Alice's measurement
// state |phi'>_12 = sum_mn b_mn |m>_1 |n>_2 is the matrix B.

#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "qtele/error.hpp"
#include "qtele/linalg.hpp"

namespace qtele {

class QuditState {
 public:
  /// Takes amplitudes that already have unit norm (within kIdentityTolerance).
  explicit QuditState(CVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    const double n2 = norm_squared(amplitudes_);
    if (std::abs(n2 - 1.0) > kIdentityTolerance) {
      throw ContractError("QuditState: squared norm " + std::to_string(n2) + " is not 1");
    }
  }

  /// Rescales any nonzero vector to unit norm.
  static QuditState normalize(const CVector& v) {
    const double n = norm(v);
    if (n == 0.0) throw ContractError("QuditState::normalize: zero vector");
    return QuditState((1.0 / n) * v);
  }

  static QuditState basis(std::size_t dim, std::size_t index) { return QuditState(CVector::basis(dim, index)); }

  std::size_t dim() const noexcept { return amplitudes_.dim(); }
  const CVector& amplitudes() const noexcept { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

 private:
  CVector amplitudes_;
};

struct ChannelTag {};
struct MeasurementTag {};

/// Square coefficient matrix of a bipartite pure state. The tag keeps the
/// channel A and the measurement B apart at the type level.
template <class Tag>
class CoefficientMatrix {
 public:
  /// With normalized = true the Hilbert-Schmidt norm must already be 1.
  CoefficientMatrix(CMatrix matrix, bool normalized) : matrix_(std::move(matrix)), normalized_(normalized) {
    detail::require_square(matrix_, "CoefficientMatrix");
    if (normalized_) {
      const double hs = hilbert_schmidt_norm_squared(matrix_);
      if (std::abs(hs - 1.0) > kIdentityTolerance) {
        throw ContractError("CoefficientMatrix: Tr(M^dagger M) = " + std::to_string(hs) + ", expected 1");
      }
    }
  }

  /// Accepts the matrix as given, e.g. the integer entries of a printed table.
  static CoefficientMatrix raw(CMatrix matrix) { return CoefficientMatrix(std::move(matrix), false); }

  /// Divides by the Hilbert-Schmidt norm so the state has unit norm.
  static CoefficientMatrix normalize(const CMatrix& matrix) {
    const double hs = frobenius_norm(matrix);
    if (hs == 0.0) throw ContractError("CoefficientMatrix::normalize: zero matrix");
    return CoefficientMatrix(divide(matrix, hs), true);
  }

  std::size_t dim() const noexcept { return matrix_.rows(); }
  const CMatrix& matrix() const noexcept { return matrix_; }
  bool is_normalized() const noexcept { return normalized_; }

  static double hilbert_schmidt_norm_squared(const CMatrix& m) {
    double s = 0.0;
    for (const auto& z : m.entries()) s += std::norm(z);
    return s;
  }

 private:
  CMatrix matrix_;
  bool normalized_;
};

using ChannelMatrix = CoefficientMatrix<ChannelTag>;
using MeasurementOperator = CoefficientMatrix<MeasurementTag>;

/// M = conj(B) A; Bob's unnormalized amplitudes after the outcome are M^t alpha.
class ComposedMap {
 public:
  /// from_normalized records whether A and B were both normalized, which the
  /// Born-rule probabilities require.
  explicit ComposedMap(CMatrix matrix, bool from_normalized = false)
      : matrix_(std::move(matrix)), from_normalized_(from_normalized) {
    detail::require_square(matrix_, "ComposedMap");
  }

  std::size_t dim() const noexcept { return matrix_.rows(); }
  const CMatrix& matrix() const noexcept { return matrix_; }
  bool from_normalized() const noexcept { return from_normalized_; }

 private:
  CMatrix matrix_;
  bool from_normalized_;
};

/// M = rho X with rho the largest singular value of M.
struct ChannelDecomposition {
  double rho;
  CMatrix x;
};

struct TeleportOutcome {
  QuditState corrected_state;
  double outcome_probability;
  /// Probability of this outcome and a successful correction. Equals the
  /// outcome probability when the correction is unitary.
  double success_probability;
  /// Fidelity of the corrected state conditioned on success.
  double fidelity;
  /// Fidelity when Bob applies the adjoint (X^t)^dagger instead, which is
  /// the deterministic unitary correction whenever X is unitary.
  double deterministic_fidelity;
  bool faithful;
  double rho;
  CMatrix correction;
};

}  // namespace qtele
