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

// Every real 2x2 unitary is either a rotation [[c, -s], [s, c]] (det +1) or
// a reflection [[c, s], [s, -c]] (det -1), with c = cos(theta) and
// s = sin(theta).

#pragma once

#include <cmath>
#include <numbers>

#include "qtele/error.hpp"
#include "qtele/linalg.hpp"

namespace qtele {

enum class RotationKind { reflection, rotation };

struct RotationForm {
  /// In (-pi, pi].
  double theta;
  RotationKind form;
};

inline const char* to_string(RotationKind k) { return k == RotationKind::rotation ? "rotation" : "reflection"; }

inline CMatrix reconstruct(const RotationForm& f) {
  const double c = std::cos(f.theta);
  const double s = std::sin(f.theta);
  if (f.form == RotationKind::rotation) return CMatrix::from_rows({{c, -s}, {s, c}});
  return CMatrix::from_rows({{c, s}, {s, -c}});
}

inline RotationForm characterize_real_unitary(const CMatrix& x) {
  if (x.rows() != 2 || x.cols() != 2) throw DomainError("characterize_real_unitary: expected 2x2, got " + x.shape());
  for (const auto& z : x.entries()) {
    if (std::abs(z.imag()) > kIdentityTolerance) {
      throw DomainError("characterize_real_unitary: matrix has non-real entries");
    }
  }
  if (!is_unitary(x, kDefaultTolerance)) throw DomainError("characterize_real_unitary: matrix is not unitary");

  const double det = x(0, 0).real() * x(1, 1).real() - x(0, 1).real() * x(1, 0).real();
  // Both forms carry (cos, sin) down the first column.
  double theta = std::atan2(x(1, 0).real(), x(0, 0).real());
  if (theta <= -std::numbers::pi) theta = std::numbers::pi;
  return {theta, det > 0.0 ? RotationKind::rotation : RotationKind::reflection};
}

}  // namespace qtele
