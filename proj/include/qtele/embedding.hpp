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

// Teleporting an n-dimensional state through an m-dimensional channel.
//
// Alice's state is zero-padded to m amplitudes, so only the first n columns
// of M^t act. Its leading n x n block B carries the state onto Bob's target
// subspace; the block L below it (rows n..m-1) leaks amplitude out of it.
// Bob inverts the block, U' = (B / rho')^{-1}, and acts with U' (+) 0.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qtele/error.hpp"
#include "qtele/kernel.hpp"
#include "qtele/linalg.hpp"
#include "qtele/state.hpp"

namespace qtele {

inline QuditState embed_state(const QuditState& alpha, std::size_t m) {
  if (alpha.dim() > m) {
    throw DomainError("embed_state: cannot embed dimension " + std::to_string(alpha.dim()) + " into " +
                      std::to_string(m));
  }
  std::vector<Complex> padded(m);
  for (std::size_t i = 0; i < alpha.dim(); ++i) padded[i] = alpha[i];
  return QuditState(CVector(std::move(padded)));
}

struct EmbeddingReport {
  std::size_t n;
  std::size_t m;
  /// U' (+) 0, m x m.
  CMatrix u;
  /// Frobenius norm of the leaking block L.
  double leakage;
  /// Largest singular value of the target block B.
  double block_rho;
  bool faithful;
};

/// Worst case over input states of the fidelity after Bob applies U' on the
/// target subspace and leaves the rest alone: rho'^2 / (rho'^2 + leakage^2).
/// Attained when the leak is rank one and aligned with the input.
inline double fidelity_lower_bound(const EmbeddingReport& r) {
  const double p = r.block_rho * r.block_rho;
  return p / (p + r.leakage * r.leakage);
}

/// U' (+) I: Bob's full-register operation that corrects the target subspace
/// and passes the leaked components through.
inline CMatrix subspace_completion(const EmbeddingReport& r) {
  const CMatrix u_block = leading_block(r.u, r.n, r.n);
  if (r.n == r.m) return u_block;
  return direct_sum(u_block, CMatrix::identity(r.m - r.n));
}

inline EmbeddingReport truncate_correction(const ComposedMap& m, std::size_t n, double tol = kDefaultTolerance) {
  const std::size_t dim = m.dim();
  if (n == 0 || n > dim) {
    throw DomainError("truncate_correction: source dimension " + std::to_string(n) + " not in 1.." +
                      std::to_string(dim));
  }
  const CMatrix mt = transpose(m.matrix());
  // Singular values of the untransposed block, so n == m reproduces
  // correction_operator bit for bit.
  const CMatrix block_of_m = leading_block(m.matrix(), n, n);
  if (max_abs(block_of_m) <= kDegenerateThreshold) {
    throw UnrecoverableOutcomeError("truncate_correction: target block is zero");
  }
  const CMatrix block = transpose(block_of_m);
  const auto sv = singular_values(block_of_m);
  const double rho = sv.front();

  CMatrix u_block = CMatrix::identity(n);
  try {
    u_block = inverse(divide(block, rho));
  } catch (const SingularityError& e) {
    throw UnrecoverableOutcomeError("truncate_correction: target block is singular (smallest pivot " +
                                    std::to_string(e.smallest_pivot()) + ")");
  }

  double leak2 = 0.0;
  for (std::size_t i = n; i < dim; ++i) {
    for (std::size_t j = 0; j < n; ++j) leak2 += std::norm(mt(i, j));
  }
  const double leakage = std::sqrt(leak2);
  const bool block_unitary = sv.back() > 0.0 && (sv.front() - sv.back()) / sv.front() <= tol;

  const CMatrix u = n == dim ? u_block : direct_sum(u_block, CMatrix::zeros(dim - n, dim - n));
  return EmbeddingReport{n, dim, u, leakage, rho, leakage <= tol && block_unitary};
}

}  // namespace qtele
