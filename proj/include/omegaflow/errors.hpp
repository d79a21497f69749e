// Copyright 2026 The Omegaflow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace omegaflow {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the domain of the requested function.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An iterative solver hit its iteration cap. Indicates a bug on valid input.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

// Point too close to the Dom(Omega) boundary for derivatives to be meaningful.
class SingularBoundary : public Error {
 public:
  using Error::Error;
};

// A computed locus point failed its substitution check.
class VerificationError : public Error {
 public:
  using Error::Error;
};

// Margin filtering removed every grid point.
class EmptyGrid : public Error {
 public:
  using Error::Error;
};

// Both step-halving errors are at rounding level; the order is indeterminate.
class DegenerateResidual : public Error {
 public:
  using Error::Error;
};

}  // namespace omegaflow
