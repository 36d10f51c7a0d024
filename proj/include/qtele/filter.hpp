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

// Probabilistic correction for non-unitary X.
//
// Bob cannot apply (M^t)^{-1} deterministically when it is not unitary, but
// he can apply the rescaled filter K = s (M^t)^{-1} as one element of a
// two-outcome generalized measurement {K, sqrt(I - K^dagger K)} as long as
// ||K|| <= 1. The largest admissible scale is s = sigma_min(M), and on
// success Bob holds exactly alpha. The joint probability of the outcome and
// of filter success is ||K M^t alpha||^2 = sigma_min(M)^2 for every alpha.

#pragma once

#include <string>

#include "qtele/error.hpp"
#include "qtele/kernel.hpp"
#include "qtele/linalg.hpp"
#include "qtele/state.hpp"

namespace qtele {

struct ProbabilisticFilter {
  CMatrix filter;
  /// sigma_min(M), the factor applied to (M^t)^{-1}.
  double scale;
  /// scale^2: probability of this outcome followed by filter success.
  double joint_success_probability;
};

inline ProbabilisticFilter probabilistic_filter(const ComposedMap& m) {
  CMatrix inv_t = CMatrix::zeros(m.dim(), m.dim());
  try {
    inv_t = inverse(transpose(m.matrix()));
  } catch (const SingularityError& e) {
    throw UnrecoverableOutcomeError(std::string("probabilistic_filter: composed map is singular ") +
                                    "(smallest pivot " + std::to_string(e.smallest_pivot()) + ")");
  }
  // sigma_min(M) = 1 / sigma_max(M^{-1}); taking it from the computed inverse
  // keeps ||K|| = 1 to rounding even when M is poorly conditioned.
  const double scale = 1.0 / singular_values(inv_t).front();
  return {scale * inv_t, scale, scale * scale};
}

/// ||K v||^2 / ||v||^2: success probability given that the outcome occurred.
inline double conditional_success_probability(const ProbabilisticFilter& f, const CVector& v) {
  const double n2 = norm_squared(v);
  if (n2 == 0.0) throw DomainError("conditional_success_probability: zero outcome vector");
  return norm_squared(f.filter * v) / n2;
}

}  // namespace qtele
