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

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "bosonlaw/interferometer.hpp"
#include "bosonlaw/occupation.hpp"

namespace bosonlaw {

/// One photon at input \p port in the internal state cos(alpha)|1> + sin(alpha)|2>,
/// all others in |1>. alpha = 0 is fully indistinguishable, pi/2 fully distinguishable.
struct PartialSource {
  std::size_t port = 0;
  double alpha = 0.0;
};

/// cos^2(alpha) |<n|m>|^2 + sin^2(alpha) sum_l |U_{kl}|^2 |<n - 1_l|m - 1_k>|^2,
/// where outputs with n_l = 0 drop out. Throws ContractError when m has no
/// photon at the source port or alpha lies outside [0, pi/2].
double partial_probability(const Interferometer& u, const OccupationVector& m,
                           const OccupationVector& n, const PartialSource& src);

/// The two coefficients of P(alpha) = A cos^2(alpha) + B sin^2(alpha).
std::pair<double, double> partial_coefficients(const Interferometer& u, const OccupationVector& m,
                                               const OccupationVector& n, std::size_t port);

struct SurvivalResult {
  bool survives = false;
  double alpha = 0.0;
  double probability = 0.0;
};

/// Evaluates the law at alpha = pi/4; it survives when P < tol::kZeroAmplitude.
/// Throws ContractError when <n|m> is not suppressed at alpha = 0.
SurvivalResult law_survives(const Interferometer& u, const OccupationVector& m,
                            const OccupationVector& n, std::size_t port);

/// (alpha, P) on a uniform grid of \p steps + 1 angles over [0, pi/2].
std::vector<std::pair<double, double>> probability_sweep(const Interferometer& u,
                                                         const OccupationVector& m,
                                                         const OccupationVector& n,
                                                         std::size_t port, int steps);

/// The three conditions for the distinguishable-photon terms of the T1
/// (theta = pi/2) process (n1,1,1) -> (n1,1,1) to vanish, evaluated at tau:
///   (n1+1) sqrt(tau(1-tau)) + sqrt(3)(n1+1) tau - sqrt(3) n1,
///   (n1+1) sqrt(tau(1-tau)) - sqrt(3)(n1+1) tau + sqrt(3) n1,
///   4(n1+1) tau sqrt(1-tau) - 3 sqrt(1-tau).
std::array<double, 3> tritter_breaking_conditions(int n1, double tau);

}  // namespace bosonlaw
