// Copyright 2026 The twostate Authors
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

namespace twostate {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters outside the closed-channel regime 0 < E < V (or other
/// physically invalid values such as a non-positive mass).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Reduced-unit operation called with parameters not in the hbar = 1,
/// m = 1/2 convention.
class ConventionError : public Error {
 public:
  using Error::Error;
};

/// A quantity that is singular or identically zero for the given input,
/// e.g. the reflection phase at k0 = 0 or the extremal coupling at eps = 1/2.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Caller violated a numerical precondition (step too large, too few widths).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A linear solve or self-check failed to reach its tolerance.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Wave packet reached the edge of the computational domain.
class BoundaryError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Total norm of a propagated state drifted beyond tolerance.
class NormDriftError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Invalid sweep description.
class SpecError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace twostate
