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

#include "qtele/linalg.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "gtest/gtest.h"

#include "qtele/random.hpp"
#include "test_util.hpp"

using namespace qtele;
using qtele::testing::test_rng;

namespace {

const Complex I{0.0, 1.0};

CMatrix real_y() { return CMatrix::from_rows({{0, -1}, {1, 0}}); }
CMatrix sigma_x() { return CMatrix::from_rows({{0, 1}, {1, 0}}); }

}  // namespace

TEST(CMatrix, rejects_bad_shapes_and_non_finite_entries) {
  EXPECT_THROW(CMatrix(2, 2, std::vector<Complex>(3)), ShapeError);
  EXPECT_THROW(CMatrix(0, 2, {}), ShapeError);
  EXPECT_THROW(CMatrix::from_rows({{1, 2}, {3}}), ShapeError);
  EXPECT_THROW(CMatrix::from_rows({{1, std::numeric_limits<double>::quiet_NaN()}}), NumericalError);
  EXPECT_THROW(CVector({1.0, std::numeric_limits<double>::infinity()}), NumericalError);
}

TEST(matmul, worked_products) {
  EXPECT_EQ(real_y() * CMatrix::identity(2), real_y());
  EXPECT_EQ(sigma_x() * sigma_x(), CMatrix::identity(2));
  EXPECT_EQ(real_y() * real_y(), Complex{-1.0} * CMatrix::identity(2));
}

TEST(matmul, shape_error_names_both_shapes) {
  try {
    matmul(CMatrix::zeros(2, 3), CMatrix::zeros(2, 3));
    FAIL() << "expected ShapeError";
  } catch (const ShapeError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("2x3"), std::string::npos);
    EXPECT_NE(what.find("by 2x3"), std::string::npos);
  }
  EXPECT_EQ(matmul(CMatrix::zeros(2, 3), CMatrix::zeros(3, 4)).shape(), "2x4");
}

TEST(matmul, associative_on_random_triples) {
  auto rng = test_rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const CMatrix a = random_matrix(n, n, rng), b = random_matrix(n, n, rng), c = random_matrix(n, n, rng);
    EXPECT_LE(frobenius_norm((a * b) * c - a * (b * c)), 1e-12);
  }
}

TEST(inverse, worked_inverses) {
  EXPECT_EQ(inverse(CMatrix::identity(3)), CMatrix::identity(3));
  EXPECT_EQ(inverse(CMatrix::from_rows({{0, 1}, {-1, 0}})), real_y());
}

TEST(inverse, random_3x3_multiplies_back_to_identity) {
  auto rng = test_rng(2);
  const CMatrix m = random_matrix(3, 3, rng);
  EXPECT_LE(frobenius_norm(m * inverse(m) - CMatrix::identity(3)), 1e-12 * 3);
}

TEST(inverse, residual_up_to_dim_16) {
  auto rng = test_rng(3);
  for (std::size_t n = 1; n <= 16; ++n) {
    // Unitary plus a multiple of the identity keeps the condition number small.
    const CMatrix m = random_unitary(n, rng) + Complex{2.0} * CMatrix::identity(n);
    EXPECT_LE(frobenius_norm(m * inverse(m) - CMatrix::identity(n)), 1e-12 * static_cast<double>(n)) << "n=" << n;
  }
}

TEST(inverse, singular_matrix_reports_smallest_pivot) {
  try {
    inverse(CMatrix::from_rows({{1, 2}, {2, 4}}));
    FAIL() << "expected SingularityError";
  } catch (const SingularityError& e) {
    EXPECT_LE(e.smallest_pivot(), 1e-12 * 4);
  }
  EXPECT_THROW(inverse(CMatrix::zeros(2, 2)), SingularityError);
  EXPECT_THROW(inverse(CMatrix::diagonal({1.0, 1e-14})), SingularityError);
  EXPECT_NO_THROW(inverse(CMatrix::diagonal({1.0, 1e-10})));
  EXPECT_THROW(inverse(CMatrix::zeros(2, 3)), ShapeError);
}

TEST(adjoint, transpose_and_conjugate) {
  EXPECT_EQ(transpose(real_y()), CMatrix::from_rows({{0, 1}, {-1, 0}}));
  EXPECT_EQ(conjugate(CMatrix::from_rows({{0, -I}, {I, 0}})), CMatrix::from_rows({{0, I}, {-I, 0}}));
  auto rng = test_rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix m = random_matrix(3, 2, rng);
    EXPECT_EQ(adjoint(adjoint(m)), m);
    EXPECT_EQ(adjoint(m), conjugate(transpose(m)));
  }
}

TEST(kron, identities_basis_columns_and_shapes) {
  EXPECT_EQ(kron(CMatrix::identity(2), CMatrix::identity(2)), CMatrix::identity(4));
  const std::size_t n = 3;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const CMatrix k = kron(CMatrix::column(CVector::basis(n, i)), CMatrix::column(CVector::basis(n, j)));
      // 1-based (i-1) N + j, i.e. 0-based i N + j.
      EXPECT_EQ(k, CMatrix::column(CVector::basis(n * n, i * n + j)));
    }
  }
  EXPECT_EQ(kron(CMatrix::zeros(2, 3), CMatrix::zeros(4, 5)).shape(), "8x15");
  const CMatrix a = CMatrix::from_rows({{1, 2}, {3, 4}});
  const CMatrix b = CMatrix::from_rows({{0, 5}, {6, 7}});
  const CMatrix k = kron(a, b);
  EXPECT_EQ(k(1, 2), a(0, 1) * b(1, 0));
  EXPECT_EQ(k(3, 3), a(1, 1) * b(1, 1));
}

TEST(singular_values, worked_values) {
  const auto half = singular_values(CMatrix::diagonal({0.5, 0.5}));
  EXPECT_NEAR(half[0], 0.5, 1e-15);
  EXPECT_NEAR(half[1], 0.5, 1e-15);
  const auto sv = singular_values(CMatrix::diagonal({0.2, 0.8}));
  EXPECT_NEAR(sv[0], 0.8, 1e-15);
  EXPECT_NEAR(sv[1], 0.2, 1e-15);

  const CMatrix bell = Complex{qtele::testing::kInvSqrt2} * CMatrix::identity(2);
  const auto bb = singular_values(conjugate(bell) * bell);
  EXPECT_NEAR(bb[0], 0.5, 1e-15);
  EXPECT_NEAR(bb[1], 0.5, 1e-15);
}

TEST(singular_values, agree_with_closed_form_for_2x2) {
  // For 2x2, sigma^2 are the roots of t^2 - ||M||_F^2 t + |det M|^2.
  auto rng = test_rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const CMatrix m = random_matrix(2, 2, rng);
    const double f2 = std::pow(frobenius_norm(m), 2);
    const double d2 = std::norm(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
    const double disc = std::sqrt(f2 * f2 - 4.0 * d2);
    const double hi = std::sqrt((f2 + disc) / 2.0);
    const double lo = std::sqrt(d2) / hi;
    const auto sv = singular_values(m);
    EXPECT_NEAR(sv[0], hi, 1e-12 * hi);
    EXPECT_NEAR(sv[1], lo, 1e-10 * hi);
  }
}

TEST(singular_values, invariant_under_unitary_multiplication_and_scaling) {
  auto rng = test_rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const CMatrix m = random_matrix(n, n, rng);
    const CMatrix u = random_unitary(n, rng), v = random_unitary(n, rng);
    const auto base = singular_values(m);
    const auto rotated = singular_values(u * m * v);
    const Complex c = random_gaussian(rng);
    const auto scaled = singular_values(c * m);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(rotated[i], base[i], 1e-10);
      EXPECT_NEAR(scaled[i], std::abs(c) * base[i], 1e-12 * std::max(1.0, std::abs(c) * base[0]));
    }
    for (std::size_t i = 0; i + 1 < n; ++i) EXPECT_GE(base[i], base[i + 1]);
    EXPECT_GE(base.back(), 0.0);
  }
}

TEST(singular_values, sixteen_by_sixteen_converges) {
  auto rng = test_rng(7);
  const CMatrix m = random_matrix(16, 16, rng);
  const auto sv = singular_values(m);
  double s2 = 0.0;
  for (double s : sv) s2 += s * s;
  EXPECT_NEAR(s2, std::pow(frobenius_norm(m), 2), 1e-10 * s2);
}

TEST(hermitian_eigenvalues, diagonal_of_unitary_conjugation) {
  auto rng = test_rng(8);
  const CMatrix u = random_unitary(5, rng);
  const CMatrix d = CMatrix::diagonal({3.0, -1.0, 0.5, 2.0, 0.0});
  const auto ev = hermitian_eigenvalues(u * d * adjoint(u));
  const std::vector<double> expected{3.0, 2.0, 0.5, 0.0, -1.0};
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(ev[i], expected[i], 1e-12);
}

TEST(is_unitary, worked_cases) {
  EXPECT_TRUE(is_unitary(CMatrix::identity(3)));
  const double t = 0.7;
  EXPECT_TRUE(is_unitary(CMatrix::from_rows({{std::cos(t), std::sin(t)}, {std::sin(t), -std::cos(t)}})));
  EXPECT_FALSE(is_unitary(CMatrix::diagonal({0.8, 0.2})));
  EXPECT_THROW(is_unitary(CMatrix::zeros(2, 3)), ShapeError);
}

TEST(equal_up_to_phase, recovers_global_phase) {
  auto rng = test_rng(9);
  const CMatrix m = random_matrix(3, 3, rng);
  const Complex phase = std::polar(1.0, 2.1);
  EXPECT_TRUE(equal_up_to_phase(phase * m, m, 1e-12));
  EXPECT_LE(std::abs(best_fit_phase(phase * m, m) - phase), 1e-12);
  EXPECT_FALSE(equal_up_to_phase(Complex{2.0} * m, m));
  EXPECT_TRUE(equal_up_to_phase(Complex{-1.0} * real_y(), real_y(), 0.0));
}
