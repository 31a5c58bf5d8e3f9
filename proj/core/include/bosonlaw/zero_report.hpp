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
#include <vector>

#include "bosonlaw/occupation.hpp"

namespace bosonlaw {

/// Zeros in tau of a beamsplitter amplitude <n|m> at phi = 0, where the
/// matrix and hence the amplitude are real.
struct ZeroReport {
  std::vector<double> zero_locations;  // ascending, in (0, 1)
  int count = 0;
  double amplitude_at_0 = 0.0;
  double amplitude_at_1 = 0.0;
  double max_bracket = 0.0;  // widest final bisection bracket
};

/// Throws ContractError unless both configurations have two modes and equal
/// photon numbers, and for grid_steps < 1000.
ZeroReport bs_zero_report(const OccupationVector& m, const OccupationVector& n, int grid_steps);

/// Real amplitude <n|m> on the phi = 0 beamsplitter.
double bs_real_amplitude(const OccupationVector& m, const OccupationVector& n, double tau);

struct InterlaceResult {
  bool interlaced = false;
  std::string witness;  // the offending neighbours, or the merged order
};

/// True when the zeros of <n|m> and <n_shifted|m> alternate along tau.
/// n_shifted must differ from n by one boson moved between the two modes.
InterlaceResult check_interlacing(const OccupationVector& m, const OccupationVector& n,
                                  const OccupationVector& n_shifted, int grid_steps = 4000);

}  // namespace bosonlaw
