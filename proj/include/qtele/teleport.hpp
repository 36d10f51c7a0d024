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

#pragma once

#include <string>

#include "qtele/error.hpp"
#include "qtele/filter.hpp"
#include "qtele/kernel.hpp"
#include "qtele/state.hpp"

namespace qtele {

/// End-to-end teleportation of alpha for one measurement outcome B.
///
/// Throws DegenerateChannelError if conj(B) A vanishes and
/// UnrecoverableOutcomeError if it is singular.
inline TeleportOutcome teleport(const QuditState& alpha, const ChannelMatrix& a, const MeasurementOperator& b,
                                double tol = kDefaultTolerance) {
  if (!a.is_normalized() || !b.is_normalized()) {
    throw ContractError("teleport: channel and measurement must be normalized");
  }
  if (alpha.dim() != a.dim()) {
    throw ShapeError("teleport: state of dimension " + std::to_string(alpha.dim()) + " does not match channel " +
                     a.matrix().shape());
  }
  const ComposedMap m = compose(b, a);
  const ChannelDecomposition d = decompose(m);
  const CMatrix u = correction_operator(m);
  const CVector v = project_coefficients(m, alpha);
  const double p_outcome = norm_squared(v);

  const QuditState corrected = QuditState::normalize(apply_correction(u, v));
  const bool faithful = is_faithful(m, tol);
  const double success = faithful ? p_outcome : probabilistic_filter(m).joint_success_probability;

  const CVector adj = adjoint(transpose(d.x)) * v;
  const double det_fid = norm(adj) == 0.0 ? 0.0 : fidelity(alpha, QuditState::normalize(adj));

  return TeleportOutcome{
      .corrected_state = corrected,
      .outcome_probability = p_outcome,
      .success_probability = success,
      .fidelity = fidelity(alpha, corrected),
      .deterministic_fidelity = det_fid,
      .faithful = faithful,
      .rho = d.rho,
      .correction = u,
  };
}

}  // namespace qtele
