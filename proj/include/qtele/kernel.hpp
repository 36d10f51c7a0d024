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

// Closed-form teleportation kernel.
//
// Projecting |alpha>_1 (x) |phi>_23 onto Alice's outcome |phi'>_12 leaves
// Bob with sum_k (sum_ij alpha_i conj(b_ij) a_jk) |k>_3, i.e. the vector
// M^t alpha with M = conj(B) A. Writing M = rho X, Bob undoes the map with
// U = (X^t)^{-1}; the correction is unitary exactly when X is.

#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "qtele/error.hpp"
#include "qtele/linalg.hpp"
#include "qtele/state.hpp"

namespace qtele {

/// Maps whose largest entry magnitude is at or below this count as zero.
inline constexpr double kDegenerateThreshold = 1e-14;

inline ComposedMap compose(const MeasurementOperator& b, const ChannelMatrix& a) {
  if (b.dim() != a.dim()) {
    throw ShapeError("compose: measurement " + b.matrix().shape() + " does not match channel " +
                     a.matrix().shape());
  }
  return ComposedMap(conjugate(b.matrix()) * a.matrix(), a.is_normalized() && b.is_normalized());
}

/// Bob's unnormalized post-measurement amplitudes M^t alpha.
inline CVector project_coefficients(const ComposedMap& m, const QuditState& alpha) {
  if (m.dim() != alpha.dim()) {
    throw ShapeError("project_coefficients: map of dimension " + std::to_string(m.dim()) +
                     " applied to state of dimension " + std::to_string(alpha.dim()));
  }
  return transpose(m.matrix()) * alpha.amplitudes();
}

inline ChannelDecomposition decompose(const ComposedMap& m) {
  if (max_abs(m.matrix()) <= kDegenerateThreshold) {
    throw DegenerateChannelError("decompose: composed map is zero; no amplitude reaches Bob");
  }
  const double rho = singular_values(m.matrix()).front();
  return {rho, divide(m.matrix(), rho)};
}

/// (sigma_max - sigma_min) / sigma_max, or 1 for the zero map.
inline double singular_value_spread(const CMatrix& m) {
  const auto sv = singular_values(m);
  if (sv.front() == 0.0) return 1.0;
  return (sv.front() - sv.back()) / sv.front();
}

/// True iff M^dagger M is proportional to the identity: all singular values
/// agree to relative tolerance tol and are nonzero. Equivalent to X unitary.
inline bool is_faithful(const ComposedMap& m, double tol = kDefaultTolerance) {
  const auto sv = singular_values(m.matrix());
  return sv.front() > 0.0 && (sv.front() - sv.back()) / sv.front() <= tol;
}

/// U = (X^t)^{-1}, which satisfies U M^t alpha = rho alpha for every alpha.
inline CMatrix correction_operator(const ComposedMap& m) {
  if (max_abs(m.matrix()) <= kDegenerateThreshold) {
    throw UnrecoverableOutcomeError("correction_operator: composed map is zero");
  }
  const ChannelDecomposition d = decompose(m);
  try {
    return inverse(transpose(d.x));
  } catch (const SingularityError& e) {
    throw UnrecoverableOutcomeError(std::string("correction_operator: composed map is singular, ") +
                                    "teleportation impossible for this outcome (smallest pivot " +
                                    std::to_string(e.smallest_pivot()) + ")");
  }
}

/// (X^t)^dagger: the inverse of X^t whenever X is unitary.
inline CMatrix adjoint_correction(const ComposedMap& m) { return adjoint(transpose(decompose(m).x)); }

inline CVector apply_correction(const CMatrix& u, const CVector& v) {
  if (u.cols() != v.dim()) {
    throw ShapeError("apply_correction: operator " + u.shape() + " applied to vector of dimension " +
                     std::to_string(v.dim()));
  }
  return u * v;
}

/// |<p|q>|^2, clamped into [0, 1].
inline double fidelity(const QuditState& p, const QuditState& q) {
  if (p.dim() != q.dim()) {
    throw ShapeError("fidelity: dimension mismatch " + std::to_string(p.dim()) + " vs " + std::to_string(q.dim()));
  }
  return std::clamp(std::norm(inner(p.amplitudes(), q.amplitudes())), 0.0, 1.0);
}

/// Born probability ||M^t alpha||^2 of the outcome. Needs normalized A and B.
inline double outcome_probability(const ComposedMap& m, const QuditState& alpha) {
  if (!m.from_normalized()) {
    throw ContractError("outcome_probability: channel and measurement must both be normalized");
  }
  return norm_squared(project_coefficients(m, alpha));
}

}  // namespace qtele
