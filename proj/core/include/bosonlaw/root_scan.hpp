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

#include "bosonlaw/types.hpp"

namespace bosonlaw {

using RealFunction = std::function<double(double)>;
using ComplexFunction = std::function<Complex(double)>;

struct RootEstimate {
  double x = 0.0;
  double residual = 0.0;  // |f(x)|
  int multiplicity = 1;
  double bracket = 0.0;  // final bisection width, 0 for exact or polished roots
};

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

/// Bisection on a bracketing interval [a, b] with f(a) f(b) <= 0, to width \p tol.
double bisect(const RealFunction& f, double a, double b, double tol);
/// The final bracket of the same bisection; width at most \p tol.
Bracket bisect_bracket(const RealFunction& f, double a, double b, double tol);

/// Sign changes of \p f on a uniform grid of \p steps cells over [a, b], each
/// refined by bisection. Exact grid zeros are reported once.
std::vector<RootEstimate> real_roots(const RealFunction& f, double a, double b, int steps,
                                     double tol);

/// Zeros of a complex function of one real variable: local minima of |f| on
/// the grid, polished by golden-section search, kept when |f| < accept.
/// A root whose derivative magnitude, relative to the grid maximum of |f|, is
/// below tol::kDoubleRootSlope is reported with multiplicity 2.
std::vector<RootEstimate> complex_roots(const ComplexFunction& f, double a, double b, int steps,
                                        double accept);

/// Golden-section minimization of \p f on [a, b].
double golden_minimize(const RealFunction& f, double a, double b, int iterations = 200);

/// Keeps roots in the open interval (0, 1) away from the endpoints by more
/// than tol::kTrivialRoot; the rest go to \p trivial when non-null.
std::vector<RootEstimate> drop_trivial(std::vector<RootEstimate> roots,
                                       std::vector<RootEstimate>* trivial = nullptr);

bool is_trivial_tau(double tau);

}  // namespace bosonlaw
