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

namespace specdist::tol {

// Single source of truth for every numerical threshold in the library.

/// Hermiticity / unitarity / linearity checks when a value is constructed.
inline constexpr double kConstruction = 1e-12;
/// Identities that hold exactly in exact arithmetic (eigen residuals,
/// unitary invariance of norms).
inline constexpr double kVerification = 1e-10;
/// Relative singular-value cut for the seminorm kernel.
inline constexpr double kKernelRelative = 1e-9;
/// |tr(delta k)| above this on a kernel element k means infinite distance.
inline constexpr double kFiniteness = 1e-9;
/// Eigenvalues of delta below this get a zero coefficient in the
/// trace-norm optimal element.
inline constexpr double kDegenerateEigenvalue = 1e-10;
/// States closer than this (max entry) are treated as equal.
inline constexpr double kEqualStates = 1e-12;
/// Slack on density-matrix positivity and unit trace.
inline constexpr double kDensity = 1e-10;
/// Slack on the Bloch ball radius.
inline constexpr double kBlochRadius = 1e-10;
/// Tolerance of exact-identity verification suites.
inline constexpr double kExactSuite = 1e-9;
/// Default absolute accuracy of the general distance solver.
inline constexpr double kSolverDefault = 1e-6;

/// Jacobi eigensolver: stop when off(H) <= kJacobiOff * |H|_F.
inline constexpr double kJacobiOff = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;

}  // namespace specdist::tol
