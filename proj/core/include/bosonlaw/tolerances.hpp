// Copyright 2026 The bosonlaw Authors
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

namespace bosonlaw::tol {

/// U U^dagger = I, checked when an Interferometer is built.
inline constexpr double kUnitarity = 1e-12;
/// Algebraic identities between exact expressions.
inline constexpr double kIdentity = 1e-12;
/// An amplitude below this magnitude counts as suppressed.
inline constexpr double kZeroAmplitude = 1e-10;
/// Roots this close to tau = 0 or tau = 1 are trivial.
inline constexpr double kTrivialRoot = 1e-9;
/// Residual required of refined points on a zero curve.
inline constexpr double kCurveResidual = 1e-8;
/// Width of the final bracket in real-amplitude bisection.
inline constexpr double kBisection = 1e-12;
/// Unit-modulus and reconstruction checks on phase factorizations.
inline constexpr double kPhase = 1e-9;
/// Entries smaller than this impose no phase constraint.
inline constexpr double kPhaseAnchor = 1e-8;
/// Eigenvalue products closer than this to 1 predict no suppression.
inline constexpr double kEigenProduct = 1e-8;
/// |derivative| below this marks a root as double.
inline constexpr double kDoubleRootSlope = 1e-6;

}  // namespace bosonlaw::tol
