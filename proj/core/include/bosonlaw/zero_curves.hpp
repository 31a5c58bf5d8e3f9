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

#include <functional>
#include <vector>

#include "bosonlaw/multiports.hpp"
#include "bosonlaw/tritter_laws.hpp"
#include "bosonlaw/types.hpp"

namespace bosonlaw {

struct ScanGrid {
  int tau_steps = 128;
  int theta_steps = 128;  // cells over [-pi, pi]; multiples of 4 put 0 and +-pi/2 on grid lines
};

struct CurvePoint {
  double tau = 0.0;
  double theta = 0.0;
  double residual = 0.0;  // |f| after refinement
};

/// Zeros of a tritter suppression function in the (tau, theta) plane, chained
/// by proximity. A curve may be a single isolated point.
struct ZeroCurve {
  TritterFamily family = TritterFamily::T1;
  InputFamily input = InputFamily::II;
  OutputFamily output = OutputFamily::N11;
  int size = 1;
  std::vector<CurvePoint> points;
};

using PlaneFunction = std::function<Complex(double tau, double theta)>;

/// Worker count: BOSONLAW_THREADS when set and positive, else the hardware
/// concurrency (at least 1).
int default_thread_count();

/// Grid scan of f over tau in [0, 1], theta in [-pi, pi]. A cell is a
/// candidate when the real and imaginary parts both reach zero over its
/// corners, or a corner value is already negligible. Candidates are refined by
/// damped Newton iteration on (Re f, Im f), with golden-section line searches
/// as fallback, and kept when |f| < tol::kCurveResidual with tau away from 0
/// and 1. The result does not depend on \p threads.
std::vector<CurvePoint> scan_zero_points(const PlaneFunction& f, const ScanGrid& grid, int threads);

/// Nearest-neighbour chaining with a step bound of twice the grid spacing.
std::vector<std::vector<CurvePoint>> link_points(std::vector<CurvePoint> points, const ScanGrid& grid);

/// Throws ContractError for grids coarser than 64 x 64.
std::vector<ZeroCurve> scan_zero_curves(TritterFamily family, InputFamily input, OutputFamily output,
                                        int size, const ScanGrid& grid, int threads = 0);

}  // namespace bosonlaw
