// Copyright 2026 The gcs Authors
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

namespace gcs {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument is outside the domain of the operation (ω ≤ 0, D < 2, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A truncated Fock representation cannot hold the requested state to the
/// active tolerance. Carries the probability mass that was actually achieved
/// (or the tail mass that was left over) so callers can report it.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, double tail_mass)
      : Error(what), tail_mass_(tail_mass) {}

  double tail_mass() const noexcept { return tail_mass_; }

 private:
  double tail_mass_;
};

/// An adaptive integrator hit its panel cap before meeting its tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double error_estimate)
      : Error(what), error_estimate_(error_estimate) {}

  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double error_estimate_;
};

}  // namespace gcs
