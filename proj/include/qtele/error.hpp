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

#include <stdexcept>
#include <string>

namespace qtele {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions do not fit the operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Gaussian elimination met a pivot below the relative cutoff.
class SingularityError : public Error {
 public:
  SingularityError(const std::string& what, double smallest_pivot)
      : Error(what), smallest_pivot_(smallest_pivot) {}

  double smallest_pivot() const noexcept { return smallest_pivot_; }

 private:
  double smallest_pivot_;
};

/// Iterative routine failed to converge, or a non-finite value appeared.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A precondition on normalization or provenance was violated.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain an operation accepts.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The composed map vanishes; no state reaches Bob at all.
class DegenerateChannelError : public Error {
 public:
  using Error::Error;
};

/// The measurement outcome leaves Bob with a state that no correction can
/// map back to the input (singular composed map).
class UnrecoverableOutcomeError : public Error {
 public:
  using Error::Error;
};

}  // namespace qtele
