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

#include <string_view>

#include "bosonlaw/interferometer.hpp"
#include "bosonlaw/multiports.hpp"
#include "bosonlaw/occupation.hpp"
#include "bosonlaw/types.hpp"

namespace bosonlaw {

/// One-parameter input families: I is (n1, 1, 1), II is (m, m, m).
enum class InputFamily { I, II };

/// Output patterns (n1, 1, 0), (n1, 0, 1), (n1, 1, 1), (n1, 2, 0).
enum class OutputFamily { N10, N01, N11, N20 };

std::string_view to_string(InputFamily family);
std::string_view to_string(OutputFamily family);
InputFamily parse_input_family(std::string_view text);
OutputFamily parse_output_family(std::string_view text);

/// Concrete input for a size parameter (n1 for I, m for II).
OccupationVector family_input(InputFamily input, int size);

/// Output with the same photon number as family_input(input, size).
OccupationVector family_output(InputFamily input, OutputFamily output, int size);

/// Suppression function of the tritter families in closed form.
///
/// For input II and for input I on T2 these are the explicit expressions in
/// (tau, theta). For input I on T1 the function is the general polynomial in
/// the entries of U evaluated on the T1 matrix. Each is proportional, with a
/// factor that does not vanish for tau in (0, 1), to the amplitude divided by
/// suppression_prefactor.
///
/// Throws NotImplementedError for input I with a single photon in the
/// secondary modes (no closed form), ContractError for size < 1.
Complex tritter_suppression_value(TritterFamily family, InputFamily input, OutputFamily output,
                                  double tau, double theta, int size);

/// The polynomial in the entries of any 3x3 U multiplying the prefactor, for
/// outputs with one or two photons outside mode 1.
Complex general_suppression_value(const ComplexMatrix& u, const OccupationVector& m,
                                  OutputFamily output);

/// Theta = 0 factored forms for input (m, m, m) and output (n1, 2, 0).
Complex t1_n20_theta0(double tau, int m);
Complex t2_n20_theta0(double tau, int m);

}  // namespace bosonlaw
