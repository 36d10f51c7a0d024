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

// Qubit Bell family and the 16-entry correction table for Bell channels
// measured in the Bell basis.
//
// The four coefficient matrices are the identity, Z = diag(1, -1),
// X = [[0, 1], [1, 0]] and the real Y-type matrix [[0, -1], [1, 0]]. The
// table is generated from the literal products and compared against a
// reference listing whose entries in some rows carry the opposite global
// sign.

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "qtele/kernel.hpp"
#include "qtele/linalg.hpp"
#include "qtele/state.hpp"

namespace qtele {

namespace bell {

inline CMatrix identity() { return CMatrix::from_rows({{1, 0}, {0, 1}}); }
inline CMatrix z() { return CMatrix::from_rows({{1, 0}, {0, -1}}); }
inline CMatrix x() { return CMatrix::from_rows({{0, 1}, {1, 0}}); }
/// [[0, -1], [1, 0]], i.e. -i sigma_y.
inline CMatrix real_y() { return CMatrix::from_rows({{0, -1}, {1, 0}}); }

}  // namespace bell

struct BellFamily {
  std::array<MeasurementOperator, 4> operators;
};

/// Identity, Z, X, real Y, each divided by sqrt(2) when normalized.
inline BellFamily bell_family(bool normalized) {
  auto make = [normalized](const CMatrix& m) {
    return normalized ? MeasurementOperator::normalize(m) : MeasurementOperator::raw(m);
  };
  return BellFamily{{make(bell::identity()), make(bell::z()), make(bell::x()), make(bell::real_y())}};
}

struct Table1Row {
  std::size_t block;  // 0-based channel index
  std::size_t row;    // 0-based row within the block
  CMatrix a;
  CMatrix b;
  CMatrix ba;
  CMatrix ba_t;
  CMatrix u;
  CMatrix reference_ba;
  CMatrix reference_u;
  /// +1 or -1: computed BA (and U) equal this factor times the reference.
  int reference_sign;
  bool sign_matches_reference;
};

namespace detail {

struct ReferenceRow {
  int a;  // index into the Bell list: 0 I, 1 Z, 2 X, 3 real Y
  int b;
  std::array<int, 4> ba;  // row-major
  std::array<int, 4> u;
};

// Reference listing, block by block. Channels run
// I, X, real Y, Z; each block lists its four measurement outcomes.
inline constexpr std::array<ReferenceRow, 16> kReferenceTable{{
    {0, 0, {1, 0, 0, 1}, {1, 0, 0, 1}},
    {0, 1, {1, 0, 0, -1}, {1, 0, 0, -1}},
    {0, 2, {0, 1, 1, 0}, {0, 1, 1, 0}},
    {0, 3, {0, -1, 1, 0}, {0, -1, 1, 0}},

    {2, 0, {0, 1, 1, 0}, {0, 1, 1, 0}},
    {2, 1, {0, -1, 1, 0}, {0, -1, 1, 0}},
    {2, 2, {1, 0, 0, 1}, {1, 0, 0, 1}},
    {2, 3, {1, 0, 0, -1}, {1, 0, 0, -1}},

    {3, 0, {0, -1, 1, 0}, {0, -1, 1, 0}},
    {3, 1, {0, 1, 1, 0}, {0, 1, 1, 0}},
    {3, 3, {-1, 0, 0, -1}, {-1, 0, 0, -1}},
    {3, 2, {-1, 0, 0, 1}, {-1, 0, 0, 1}},

    {1, 0, {1, 0, 0, -1}, {1, 0, 0, -1}},
    {1, 2, {0, 1, -1, 0}, {0, 1, -1, 0}},
    {1, 1, {1, 0, 0, 1}, {1, 0, 0, 1}},
    {1, 3, {0, -1, -1, 0}, {0, -1, -1, 0}},
}};

inline CMatrix bell_by_index(int i) {
  switch (i) {
    case 0: return bell::identity();
    case 1: return bell::z();
    case 2: return bell::x();
    default: return bell::real_y();
  }
}

inline CMatrix from_ints(const std::array<int, 4>& e) {
  return CMatrix::generate(2, 2, [&](std::size_t i, std::size_t j) { return Complex(e[2 * i + j]); });
}

}  // namespace detail

/// All 16 (channel, outcome) pairs on raw integer matrices, with
/// U = ((BA)^t)^{-1}. Every entry is 0 or +-1, so the arithmetic is exact.
inline std::vector<Table1Row> generate_table1() {
  std::vector<Table1Row> rows;
  rows.reserve(detail::kReferenceTable.size());
  for (std::size_t idx = 0; idx < detail::kReferenceTable.size(); ++idx) {
    const auto& ref = detail::kReferenceTable[idx];
    const CMatrix a = detail::bell_by_index(ref.a);
    const CMatrix b = detail::bell_by_index(ref.b);
    const CMatrix ba = b * a;
    const CMatrix ba_t = transpose(ba);
    const CMatrix u = inverse(ba_t);
    const CMatrix ref_ba = detail::from_ints(ref.ba);
    const CMatrix ref_u = detail::from_ints(ref.u);

    int sign = 0;
    if (ba == ref_ba && u == ref_u) {
      sign = 1;
    } else if (ba == Complex{-1.0} * ref_ba && u == Complex{-1.0} * ref_u) {
      sign = -1;
    }
    rows.push_back(Table1Row{
        .block = idx / 4,
        .row = idx % 4,
        .a = a,
        .b = b,
        .ba = ba,
        .ba_t = ba_t,
        .u = u,
        .reference_ba = ref_ba,
        .reference_u = ref_u,
        .reference_sign = sign,
        .sign_matches_reference = sign == 1,
    });
  }
  return rows;
}

}  // namespace qtele
