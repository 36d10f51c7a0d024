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

// GHZ-type channels sum_i a_i |i i ... i>.
//
// Restricted to the repeated-index basis |1...1>, ..., |N...N> on Alice's
// input and Bob's register, the multi-qubit protocol is the single-qudit one
// with the diagonal channel diag(a_1, ..., a_N).

#pragma once

#include <cmath>
#include <string>

#include "qtele/error.hpp"
#include "qtele/linalg.hpp"
#include "qtele/state.hpp"
#include "qtele/teleport.hpp"

namespace qtele {

inline ChannelMatrix ghz_channel(const CVector& coeffs) {
  const double n2 = norm_squared(coeffs);
  if (std::abs(n2 - 1.0) > kIdentityTolerance) {
    throw ContractError("ghz_channel: coefficients have squared norm " + std::to_string(n2) + ", expected 1");
  }
  return ChannelMatrix(CMatrix::diagonal(coeffs.entries()), true);
}

inline TeleportOutcome teleport_ghz(const QuditState& alpha, const CVector& coeffs, const MeasurementOperator& b,
                                    double tol = kDefaultTolerance) {
  return teleport(alpha, ghz_channel(coeffs), b, tol);
}

}  // namespace qtele
