// Copyright 2026 The specdist Authors
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

namespace specdist {

/// Invalid input: wrong dimension, non-Hermitian data, |r| > 1, and so on.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The request is valid but exceeds what the dense kernels are sized for.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A precondition on the calling context does not hold (e.g. a non-unital
/// representation where a unital one is required).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An iterative kernel hit its iteration cap.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// The general distance solver stopped without closing its bracket.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double lower, double upper)
      : std::runtime_error(what), lower_(lower), upper_(upper) {}

  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }

 private:
  double lower_;
  double upper_;
};

}  // namespace specdist
