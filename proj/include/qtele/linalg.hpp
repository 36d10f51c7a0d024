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

// Dense complex matrices and vectors for the tiny sizes that occur in qudit
// teleportation (N <= 16 for operators, N^3 <= 512 for joint states).
//
// Everything is row-major and immutable once constructed. Construction
// rejects non-finite entries, so every value in flight is finite.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qtele/error.hpp"

namespace qtele {

using Complex = std::complex<double>;

/// Default tolerance for predicates (unitarity, faithfulness, phase equality).
inline constexpr double kDefaultTolerance = 1e-9;
/// Tolerance for algebraic identities such as normalization.
inline constexpr double kIdentityTolerance = 1e-12;
/// Pivot cutoff for inversion, relative to the largest entry magnitude.
inline constexpr double kSingularityThreshold = 1e-12;

namespace detail {

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline void require_finite(std::span<const Complex> entries, const char* what) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!is_finite(entries[i])) {
      throw NumericalError(std::string(what) + ": non-finite entry at flat index " +
                           std::to_string(i));
    }
  }
}

}  // namespace detail

class CVector {
 public:
  explicit CVector(std::vector<Complex> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw ShapeError("CVector: dimension must be positive");
    detail::require_finite(entries_, "CVector");
  }
  CVector(std::initializer_list<Complex> entries) : CVector(std::vector<Complex>(entries)) {}

  static CVector zeros(std::size_t dim) { return CVector(std::vector<Complex>(dim)); }

  /// Computational basis vector |index> (0-based).
  static CVector basis(std::size_t dim, std::size_t index) {
    if (index >= dim) throw ShapeError("CVector::basis: index out of range");
    std::vector<Complex> e(dim);
    e[index] = 1.0;
    return CVector(std::move(e));
  }

  std::size_t dim() const noexcept { return entries_.size(); }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Complex> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  friend bool operator==(const CVector&, const CVector&) = default;

 private:
  std::vector<Complex> entries_;
};

class CMatrix {
 public:
  CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0) throw ShapeError("CMatrix: dimensions must be positive");
    if (entries_.size() != rows_ * cols_) {
      throw ShapeError("CMatrix: " + std::to_string(entries_.size()) +
                       " entries do not fill a " + shape_string(rows_, cols_) + " matrix");
    }
    detail::require_finite(entries_, "CMatrix");
  }

  /// Nested rows, e.g. from_rows({{0, -1}, {1, 0}}).
  static CMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<Complex> e;
    e.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) throw ShapeError("CMatrix::from_rows: ragged rows");
      e.insert(e.end(), row.begin(), row.end());
    }
    return CMatrix(r, c, std::move(e));
  }

  /// Builds entry (i, j) from fn(i, j).
  template <class Fn>
  static CMatrix generate(std::size_t rows, std::size_t cols, Fn&& fn) {
    std::vector<Complex> e;
    e.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) e.push_back(static_cast<Complex>(fn(i, j)));
    }
    return CMatrix(rows, cols, std::move(e));
  }

  static CMatrix zeros(std::size_t rows, std::size_t cols) {
    return CMatrix(rows, cols, std::vector<Complex>(rows * cols));
  }

  static CMatrix identity(std::size_t n) {
    return generate(n, n, [](std::size_t i, std::size_t j) { return i == j ? 1.0 : 0.0; });
  }

  static CMatrix diagonal(std::span<const Complex> diag) {
    return generate(diag.size(), diag.size(), [&](std::size_t i, std::size_t j) {
      return i == j ? diag[i] : Complex{};
    });
  }
  static CMatrix diagonal(std::initializer_list<Complex> diag) {
    return diagonal(std::span<const Complex>(diag.begin(), diag.size()));
  }

  /// The vector as an n x 1 column.
  static CMatrix column(const CVector& v) {
    return CMatrix(v.dim(), 1, std::vector<Complex>(v.begin(), v.end()));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  std::string shape() const { return shape_string(rows_, cols_); }

  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  friend bool operator==(const CMatrix&, const CMatrix&) = default;

  static std::string shape_string(std::size_t r, std::size_t c) {
    return std::to_string(r) + "x" + std::to_string(c);
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const CMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

inline std::ostream& operator<<(std::ostream& os, const CVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? ", " : "") << v[i];
  return os << ')';
}

namespace detail {

inline void require_square(const CMatrix& m, const char* what) {
  if (!m.is_square()) throw ShapeError(std::string(what) + ": expected square matrix, got " + m.shape());
}

inline void require_same_shape(const CMatrix& a, const CMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(what) + ": shape mismatch " + a.shape() + " vs " + b.shape());
  }
}

inline void require_same_dim(const CVector& a, const CVector& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw ShapeError(std::string(what) + ": dimension mismatch " + std::to_string(a.dim()) +
                     " vs " + std::to_string(b.dim()));
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Products and structural maps

inline CMatrix matmul(const CMatrix& lhs, const CMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw ShapeError("matmul: cannot multiply " + lhs.shape() + " by " + rhs.shape());
  }
  return CMatrix::generate(lhs.rows(), rhs.cols(), [&](std::size_t i, std::size_t j) {
    Complex acc{};
    for (std::size_t k = 0; k < lhs.cols(); ++k) acc += lhs(i, k) * rhs(k, j);
    return acc;
  });
}

inline CVector apply(const CMatrix& m, const CVector& v) {
  if (m.cols() != v.dim()) {
    throw ShapeError("apply: cannot apply " + m.shape() + " to vector of dimension " +
                     std::to_string(v.dim()));
  }
  std::vector<Complex> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = 0; k < m.cols(); ++k) out[i] += m(i, k) * v[k];
  }
  return CVector(std::move(out));
}

inline CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs) { return matmul(lhs, rhs); }
inline CVector operator*(const CMatrix& m, const CVector& v) { return apply(m, v); }

inline CMatrix operator*(Complex c, const CMatrix& m) {
  return CMatrix::generate(m.rows(), m.cols(), [&](std::size_t i, std::size_t j) { return c * m(i, j); });
}

inline CVector operator*(Complex c, const CVector& v) {
  std::vector<Complex> out(v.begin(), v.end());
  for (auto& z : out) z *= c;
  return CVector(std::move(out));
}

inline CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  detail::require_same_shape(a, b, "operator+");
  return CMatrix::generate(a.rows(), a.cols(), [&](std::size_t i, std::size_t j) { return a(i, j) + b(i, j); });
}

inline CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  detail::require_same_shape(a, b, "operator-");
  return CMatrix::generate(a.rows(), a.cols(), [&](std::size_t i, std::size_t j) { return a(i, j) - b(i, j); });
}

inline CVector operator+(const CVector& a, const CVector& b) {
  detail::require_same_dim(a, b, "operator+");
  std::vector<Complex> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] + b[i];
  return CVector(std::move(out));
}

inline CVector operator-(const CVector& a, const CVector& b) {
  detail::require_same_dim(a, b, "operator-");
  std::vector<Complex> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] - b[i];
  return CVector(std::move(out));
}

/// Entry-wise division by a nonzero real scalar.
inline CMatrix divide(const CMatrix& m, double s) {
  return CMatrix::generate(m.rows(), m.cols(), [&](std::size_t i, std::size_t j) { return m(i, j) / s; });
}

inline CMatrix transpose(const CMatrix& m) {
  return CMatrix::generate(m.cols(), m.rows(), [&](std::size_t i, std::size_t j) { return m(j, i); });
}

inline CMatrix conjugate(const CMatrix& m) {
  return CMatrix::generate(m.rows(), m.cols(), [&](std::size_t i, std::size_t j) { return std::conj(m(i, j)); });
}

inline CMatrix adjoint(const CMatrix& m) {
  return CMatrix::generate(m.cols(), m.rows(), [&](std::size_t i, std::size_t j) { return std::conj(m(j, i)); });
}

/// Kronecker product: entry (i*r + k, j*s + l) is a(i, j) * b(k, l).
inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  return CMatrix::generate(a.rows() * b.rows(), a.cols() * b.cols(), [&](std::size_t row, std::size_t col) {
    return a(row / b.rows(), col / b.cols()) * b(row % b.rows(), col % b.cols());
  });
}

/// Top-left rows x cols sub-block.
inline CMatrix leading_block(const CMatrix& m, std::size_t rows, std::size_t cols) {
  if (rows > m.rows() || cols > m.cols()) {
    throw ShapeError("leading_block: " + CMatrix::shape_string(rows, cols) + " exceeds " + m.shape());
  }
  return CMatrix::generate(rows, cols, [&](std::size_t i, std::size_t j) { return m(i, j); });
}

/// a (+) b, with b's block placed after a's on the diagonal.
inline CMatrix direct_sum(const CMatrix& a, const CMatrix& b) {
  return CMatrix::generate(a.rows() + b.rows(), a.cols() + b.cols(), [&](std::size_t i, std::size_t j) {
    if (i < a.rows() && j < a.cols()) return a(i, j);
    if (i >= a.rows() && j >= a.cols()) return b(i - a.rows(), j - a.cols());
    return Complex{};
  });
}

// ---------------------------------------------------------------------------
// Norms and comparisons

inline Complex trace(const CMatrix& m) {
  detail::require_square(m, "trace");
  Complex t{};
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

inline double frobenius_norm(const CMatrix& m) {
  double s = 0.0;
  for (const auto& z : m.entries()) s += std::norm(z);
  return std::sqrt(s);
}

inline double max_abs(const CMatrix& m) {
  double best = 0.0;
  for (const auto& z : m.entries()) best = std::max(best, std::abs(z));
  return best;
}

/// <u|v>, conjugate-linear in the first argument.
inline Complex inner(const CVector& u, const CVector& v) {
  detail::require_same_dim(u, v, "inner");
  Complex acc{};
  for (std::size_t i = 0; i < u.dim(); ++i) acc += std::conj(u[i]) * v[i];
  return acc;
}

inline double norm_squared(const CVector& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return s;
}

inline double norm(const CVector& v) { return std::sqrt(norm_squared(v)); }

inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  detail::require_same_shape(a, b, "max_abs_diff");
  double best = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) best = std::max(best, std::abs(a.entries()[i] - b.entries()[i]));
  return best;
}

inline double max_abs_diff(const CVector& a, const CVector& b) {
  detail::require_same_dim(a, b, "max_abs_diff");
  double best = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) best = std::max(best, std::abs(a[i] - b[i]));
  return best;
}

inline bool approx_equal(const CMatrix& a, const CMatrix& b, double tol = kDefaultTolerance) {
  return a.rows() == b.rows() && a.cols() == b.cols() && max_abs_diff(a, b) <= tol;
}

inline bool approx_equal(const CVector& a, const CVector& b, double tol = kDefaultTolerance) {
  return a.dim() == b.dim() && max_abs_diff(a, b) <= tol;
}

/// Unit phase c minimising ||a - c b||_F; 1 when the overlap vanishes.
inline Complex best_fit_phase(const CMatrix& a, const CMatrix& b) {
  detail::require_same_shape(a, b, "best_fit_phase");
  Complex overlap{};
  for (std::size_t i = 0; i < a.entries().size(); ++i) overlap += std::conj(b.entries()[i]) * a.entries()[i];
  const double mag = std::abs(overlap);
  return mag == 0.0 ? Complex{1.0} : overlap / mag;
}

/// min over unit c of max_ij |a_ij - c b_ij|, with c fixed by the Frobenius fit.
inline double phase_aligned_distance(const CMatrix& a, const CMatrix& b) {
  return max_abs_diff(a, best_fit_phase(a, b) * b);
}

inline bool equal_up_to_phase(const CMatrix& a, const CMatrix& b, double tol = kDefaultTolerance) {
  return a.rows() == b.rows() && a.cols() == b.cols() && phase_aligned_distance(a, b) <= tol;
}

// ---------------------------------------------------------------------------
// Inversion

/// Gauss-Jordan elimination with partial pivoting. A pivot whose magnitude
/// falls to kSingularityThreshold times the largest entry magnitude aborts
/// with SingularityError carrying the smallest pivot seen.
inline CMatrix inverse(const CMatrix& m) {
  detail::require_square(m, "inverse");
  const std::size_t n = m.rows();
  const double cutoff = kSingularityThreshold * max_abs(m);

  std::vector<Complex> a(m.entries().begin(), m.entries().end());
  std::vector<Complex> inv(n * n);
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1.0;
  auto at = [n](std::vector<Complex>& v, std::size_t i, std::size_t j) -> Complex& { return v[i * n + j]; };

  double smallest_pivot = std::numeric_limits<double>::infinity();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot_row = col;
    double pivot_mag = std::abs(at(a, col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double mag = std::abs(at(a, r, col));
      if (mag > pivot_mag) {
        pivot_mag = mag;
        pivot_row = r;
      }
    }
    smallest_pivot = std::min(smallest_pivot, pivot_mag);
    if (pivot_mag == 0.0 || pivot_mag <= cutoff) {
      throw SingularityError("inverse: matrix is singular to working precision (pivot " +
                                 std::to_string(pivot_mag) + " at column " + std::to_string(col) + ")",
                             smallest_pivot);
    }
    if (pivot_row != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(at(a, col, j), at(a, pivot_row, j));
        std::swap(at(inv, col, j), at(inv, pivot_row, j));
      }
    }
    const Complex pivot = at(a, col, col);
    for (std::size_t j = 0; j < n; ++j) {
      at(a, col, j) /= pivot;
      at(inv, col, j) /= pivot;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex factor = at(a, r, col);
      if (factor == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        at(a, r, j) -= factor * at(a, col, j);
        at(inv, r, j) -= factor * at(inv, col, j);
      }
    }
  }
  return CMatrix(n, n, std::move(inv));
}

// ---------------------------------------------------------------------------
// Spectra

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations,
/// sorted descending. Only the Hermitian part of the input is used.
inline std::vector<double> hermitian_eigenvalues(const CMatrix& h, int max_sweeps = 100) {
  detail::require_square(h, "hermitian_eigenvalues");
  const std::size_t n = h.rows();
  std::vector<Complex> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = 0.5 * (h(i, j) + std::conj(h(j, i)));
  }
  auto at = [&a, n](std::size_t i, std::size_t j) -> Complex& { return a[i * n + j]; };

  auto off_diagonal = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) s += std::norm(at(i, j));
      }
    }
    return s;
  };
  double total = 0.0;
  for (const auto& z : a) total += std::norm(z);
  const double target = std::numeric_limits<double>::epsilon() * std::numeric_limits<double>::epsilon() * total;

  int sweep = 0;
  while (off_diagonal() > target) {
    if (++sweep > max_sweeps) throw NumericalError("hermitian_eigenvalues: Jacobi iteration did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex hpq = at(p, q);
        const double mag = std::abs(hpq);
        if (mag == 0.0) continue;
        // Phase-rotate q so the pivot becomes real, then apply a real rotation.
        const Complex phase = hpq / mag;
        const double app = at(p, p).real();
        const double aqq = at(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex ph_conj = std::conj(phase);
        // Columns: A <- A J with J = [[c, s], [-s e^{-i phi}, c e^{-i phi}]].
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = at(k, p);
          const Complex akq = at(k, q);
          at(k, p) = c * akp - s * ph_conj * akq;
          at(k, q) = s * akp + c * ph_conj * akq;
        }
        // Rows: A <- J^dagger A.
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = at(p, k);
          const Complex aqk = at(q, k);
          at(p, k) = c * apk - s * phase * aqk;
          at(q, k) = s * apk + c * phase * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        at(p, p) = at(p, p).real();
        at(q, q) = at(q, q).real();
      }
    }
  }

  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = at(i, i).real();
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

/// Singular values, descending, as square roots of the eigenvalues of m^dagger m.
inline std::vector<double> singular_values(const CMatrix& m) {
  detail::require_square(m, "singular_values");
  std::vector<double> values = hermitian_eigenvalues(adjoint(m) * m);
  for (auto& v : values) v = std::sqrt(std::max(v, 0.0));
  return values;
}

inline bool is_unitary(const CMatrix& m, double tol = kDefaultTolerance) {
  detail::require_square(m, "is_unitary");
  return frobenius_norm(adjoint(m) * m - CMatrix::identity(m.rows())) <= tol;
}

}  // namespace qtele
