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

// Brute-force state-vector reference.
//
// Builds the full three-party state |alpha>_1 (x) |phi>_23 and contracts it
// with Alice's measurement bra over parties 1 and 2. None of this goes near
// the composed map of kernel.hpp, so agreement between the two is evidence
// for both.
//
// Layout is party-major with party 3 fastest: amplitude (i, j, k) of the
// joint state lives at flat index (i * N + j) * N + k (0-based).

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qtele/error.hpp"
#include "qtele/linalg.hpp"
#include "qtele/state.hpp"

namespace qtele::oracle {

/// Largest per-party dimension the oracle accepts.
inline constexpr std::size_t kMaxDim = 8;

namespace detail {

inline void require_oracle_dim(std::size_t n, const char* what) {
  if (n == 0 || n > kMaxDim) {
    throw DomainError(std::string(what) + ": per-party dimension " + std::to_string(n) + " outside 1.." +
                      std::to_string(kMaxDim));
  }
}

/// Row-major flattening of a coefficient matrix, as a column.
inline CMatrix vectorize(const CMatrix& m) {
  return CMatrix(m.rows() * m.cols(), 1, std::vector<Complex>(m.entries().begin(), m.entries().end()));
}

}  // namespace detail

class JointState {
 public:
  JointState(std::size_t dim_per_party, CVector amplitudes)
      : dim_(dim_per_party), amplitudes_(std::move(amplitudes)) {
    detail::require_oracle_dim(dim_, "JointState");
    if (amplitudes_.dim() != dim_ * dim_ * dim_) throw ShapeError("JointState: expected N^3 amplitudes");
  }

  std::size_t dim_per_party() const noexcept { return dim_; }
  const CVector& amplitudes() const noexcept { return amplitudes_; }

  /// Amplitude of |i>_1 |j>_2 |k>_3, 0-based.
  const Complex& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return amplitudes_[(i * dim_ + j) * dim_ + k];
  }

 private:
  std::size_t dim_;
  CVector amplitudes_;
};

class MeasurementState {
 public:
  MeasurementState(std::size_t dim_per_party, CVector amplitudes)
      : dim_(dim_per_party), amplitudes_(std::move(amplitudes)) {
    detail::require_oracle_dim(dim_, "MeasurementState");
    if (amplitudes_.dim() != dim_ * dim_) throw ShapeError("MeasurementState: expected N^2 amplitudes");
  }

  std::size_t dim_per_party() const noexcept { return dim_; }
  const CVector& amplitudes() const noexcept { return amplitudes_; }

  /// Amplitude of |m>_1 |n>_2, 0-based.
  const Complex& operator()(std::size_t m, std::size_t n) const { return amplitudes_[m * dim_ + n]; }

 private:
  std::size_t dim_;
  CVector amplitudes_;
};

/// |alpha>_1 (x) |phi>_23 as an explicit tensor product.
inline JointState build_joint(const QuditState& alpha, const ChannelMatrix& a) {
  if (alpha.dim() != a.dim()) {
    throw ShapeError("build_joint: state of dimension " + std::to_string(alpha.dim()) + " vs channel " +
                     a.matrix().shape());
  }
  detail::require_oracle_dim(alpha.dim(), "build_joint");
  const CMatrix psi = kron(CMatrix::column(alpha.amplitudes()), detail::vectorize(a.matrix()));
  return JointState(alpha.dim(), CVector(std::vector<Complex>(psi.entries().begin(), psi.entries().end())));
}

inline MeasurementState build_measurement_state(const MeasurementOperator& b) {
  const CMatrix phi = detail::vectorize(b.matrix());
  return MeasurementState(b.dim(), CVector(std::vector<Complex>(phi.entries().begin(), phi.entries().end())));
}

/// Partial inner product over parties 1 and 2: component k is
/// sum_ij conj(phi(i, j)) psi(i, j, k).
inline CVector project(const JointState& psi, const MeasurementState& phi) {
  const std::size_t n = psi.dim_per_party();
  if (phi.dim_per_party() != n) {
    throw ShapeError("project: joint state has N = " + std::to_string(n) + ", measurement has N = " +
                     std::to_string(phi.dim_per_party()));
  }
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex bra = std::conj(phi(i, j));
      if (bra == Complex{}) continue;
      for (std::size_t k = 0; k < n; ++k) out[k] += bra * psi(i, j, k);
    }
  }
  return CVector(std::move(out));
}

struct OracleResult {
  QuditState final_state;
  double probability;
};

/// Literal protocol run: project the joint state, then apply Bob's operator u.
inline OracleResult oracle_teleport(const QuditState& alpha, const ChannelMatrix& a, const MeasurementOperator& b,
                                    const CMatrix& u) {
  if (!a.is_normalized() || !b.is_normalized()) {
    throw ContractError("oracle_teleport: channel and measurement must be normalized");
  }
  const CVector v = project(build_joint(alpha, a), build_measurement_state(b));
  const CVector w = u * v;
  if (norm(w) <= kIdentityTolerance) {
    throw UnrecoverableOutcomeError("oracle_teleport: corrected vector vanishes");
  }
  return {QuditState::normalize(w), norm_squared(v)};
}

}  // namespace qtele::oracle
