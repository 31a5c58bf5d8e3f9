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

#include <string>
#include <string_view>

#include "bosonlaw/interferometer.hpp"

namespace bosonlaw {

/// Builds an interferometer from a spec string:
///
///   bs:tau=0.5,phi=0           beamsplitter (phi defaults to 0)
///   t1:tau=0.75,theta=1.5708   tritter family T1 (theta defaults to 0)
///   t2:tau=0.6667,theta=0      tritter family T2
///   ts:theta=0                 symmetric tritter T_s(theta)
///   fourier                    T_s exactly
///   matrix:<path>              CSV of complex entries, one matrix row per line
///
/// Throws ContractError with a diagnostic on malformed input.
Interferometer parse_multiport(std::string_view spec);

/// Parses "0.5", "-2j", "0.5+0.25j", "1e-3-4e-2i", "(0.5,0.25)".
Complex parse_complex(std::string_view text);

/// Reads a square complex matrix from CSV text.
ComplexMatrix parse_complex_csv(std::string_view text);

}  // namespace bosonlaw
