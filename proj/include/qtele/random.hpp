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

// Seeded random instances for sweeps and property tests.
//
// The generator is std::mt19937_64 with complex entries drawn from
// std::normal_distribution. Streams are reproducible for a fixed seed within
// one standard library implementation.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "qtele/linalg.hpp"
#include "qtele/state.hpp"

namespace qtele {

using Rng = std::mt19937_64;

/// Independent generator for a (seed, stream) pair, e.g. one per sweep trial.
inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

inline Complex random_gaussian(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

inline CMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  return CMatrix::generate(rows, cols, [&](std::size_t, std::size_t) { return random_gaussian(rng); });
}

inline QuditState random_state(std::size_t dim, Rng& rng) {
  std::vector<Complex> v(dim);
  for (auto& z : v) z = random_gaussian(rng);
  return QuditState::normalize(CVector(std::move(v)));
}

/// Orthonormalizes the columns of a Gaussian matrix (modified Gram-Schmidt,
/// applied twice).
inline CMatrix random_unitary(std::size_t n, Rng& rng) {
  const CMatrix g = random_matrix(n, n, rng);
  std::vector<std::vector<Complex>> cols(n, std::vector<Complex>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) cols[j][i] = g(i, j);
  }
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < j; ++k) {
        Complex proj{};
        for (std::size_t i = 0; i < n; ++i) proj += std::conj(cols[k][i]) * cols[j][i];
        for (std::size_t i = 0; i < n; ++i) cols[j][i] -= proj * cols[k][i];
      }
      double nn = 0.0;
      for (const auto& z : cols[j]) nn += std::norm(z);
      nn = std::sqrt(nn);
      for (auto& z : cols[j]) z /= nn;
    }
  }
  return CMatrix::generate(n, n, [&](std::size_t i, std::size_t j) { return cols[j][i]; });
}

/// Generic channel: Gaussian coefficients, Hilbert-Schmidt normalized.
inline ChannelMatrix random_channel(std::size_t n, Rng& rng) {
  return ChannelMatrix::normalize(random_matrix(n, n, rng));
}

/// Maximally entangled channel W / sqrt(n) with W a random unitary.
inline ChannelMatrix random_maximal_channel(std::size_t n, Rng& rng) {
  return ChannelMatrix::normalize(random_unitary(n, rng));
}

/// Generalized Pauli operators X^a Z^b / sqrt(n), a, b in 0..n-1, ordered
/// with b fastest. They are orthonormal under Tr(B_j^dagger B_k) and each is
/// proportional to a unitary.
inline std::vector<MeasurementOperator> weyl_heisenberg_family(std::size_t n) {
  std::vector<MeasurementOperator> family;
  family.reserve(n * n);
  const double dn = static_cast<double>(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      // (X^a Z^b)_{ij} = omega^{b j} when i = j + a (mod n).
      const CMatrix w = CMatrix::generate(n, n, [&](std::size_t i, std::size_t j) {
        if (i != (j + a) % n) return Complex{};
        return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(b * j % n) / dn);
      });
      family.push_back(MeasurementOperator::normalize(w));
    }
  }
  return family;
}

/// n^2 operators obtained by reshaping the columns of a random n^2 x n^2
/// unitary: B_k(i, j) = W(i n + j, k). Orthonormal, generically not
/// proportional to unitaries.
inline std::vector<MeasurementOperator> random_orthonormal_family(std::size_t n, Rng& rng) {
  const CMatrix w = random_unitary(n * n, rng);
  std::vector<MeasurementOperator> family;
  family.reserve(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    const CMatrix b = CMatrix::generate(n, n, [&](std::size_t i, std::size_t j) { return w(i * n + j, k); });
    family.push_back(MeasurementOperator::normalize(b));
  }
  return family;
}

/// V W_k V' for the generalized Pauli family W_k and random unitaries V, V'.
/// Orthonormal, and every member is proportional to a unitary.
inline std::vector<MeasurementOperator> random_unitary_family(std::size_t n, Rng& rng) {
  const CMatrix left = random_unitary(n, rng);
  const CMatrix right = random_unitary(n, rng);
  std::vector<MeasurementOperator> family;
  family.reserve(n * n);
  for (const auto& w : weyl_heisenberg_family(n)) family.push_back(MeasurementOperator::normalize(left * w.matrix() * right));
  return family;
}

}  // namespace qtele
