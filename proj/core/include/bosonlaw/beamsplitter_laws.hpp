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

#include <cstdint>
#include <vector>

#include "bosonlaw/occupation.hpp"
#include "bosonlaw/suppression_law.hpp"

namespace bosonlaw {

/// Which output mode carries the one or two "secondary" photons: N1First
/// means outputs (n1, 1) / (n1, 2), N2First means (1, n2) / (2, n2).
enum class OutputOrder { N1First, N2First };

/// Root tau = m1/(m1 + m2) for output (n1, 1); m2/(m1 + m2) for (1, n2).
SuppressionLaw bs_law_single(int m1, int m2, OutputOrder order = OutputOrder::N1First);

/// The quadratic law for output (n1, 2) (or (2, n2) with m1, m2 swapped).
/// Roots (m1 (N-1) +- sqrt(m1 m2 (N-1))) / (N (N-1)), N = m1 + m2; a vanishing
/// discriminant gives one root of multiplicity 2.
SuppressionLaw bs_law_double(int m1, int m2, OutputOrder order = OutputOrder::N1First);

/// Exact integer coefficients, lowest degree first, of the suppression
/// polynomial in tau for one (\p secondary = 1) or two (\p secondary = 2)
/// photons in the secondary output mode. Throws NotImplementedError otherwise.
std::vector<std::int64_t> bs_suppression_poly(int m1, int m2, int secondary,
                                              OutputOrder order = OutputOrder::N1First);

double evaluate_poly(const std::vector<std::int64_t>& coefficients, double x);

OccupationVector bs_output(int m1, int m2, int secondary, OutputOrder order);

}  // namespace bosonlaw
