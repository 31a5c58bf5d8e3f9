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
#include "bosonlaw/root_scan.hpp"

#include <algorithm>
#include <cmath>

#include "bosonlaw/errors.hpp"
#include "bosonlaw/tolerances.hpp"

namespace bosonlaw {

Bracket bisect_bracket(const RealFunction& f, double a, double b, double tol) {
  double fa = f(a);
  const double fb = f(b);
  if (fa == 0.0) return {a, a};
  if (fb == 0.0) return {b, b};
  if ((fa > 0.0) == (fb > 0.0)) throw ContractError("bisect: interval does not bracket a root");
  while (b - a > tol) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const double fm = f(mid);
    if (fm == 0.0) return {mid, mid};
    if ((fm > 0.0) == (fa > 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return {a, b};
}

double bisect(const RealFunction& f, double a, double b, double tol) {
  const Bracket br = bisect_bracket(f, a, b, tol);
  return 0.5 * (br.lo + br.hi);
}

std::vector<RootEstimate> real_roots(const RealFunction& f, double a, double b, int steps,
                                     double tol) {
  if (steps < 1) throw ContractError("real_roots: steps must be positive");
  std::vector<RootEstimate> out;
  const double h = (b - a) / steps;
  double x0 = a;
  double f0 = f(x0);
  if (f0 == 0.0) out.push_back({x0, 0.0, 1});
  for (int i = 1; i <= steps; ++i) {
    const double x1 = i == steps ? b : a + i * h;
    const double f1 = f(x1);
    if (f1 == 0.0) {
      out.push_back({x1, 0.0, 1});
    } else if (f0 != 0.0 && (f0 > 0.0) != (f1 > 0.0)) {
      const Bracket br = bisect_bracket(f, x0, x1, tol);
      const double r = 0.5 * (br.lo + br.hi);
      out.push_back({r, std::abs(f(r)), 1, br.hi - br.lo});
    }
    x0 = x1;
    f0 = f1;
  }
  return out;
}

double golden_minimize(const RealFunction& f, double a, double b, int iterations) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iterations && b - a > 1e-16 * (1.0 + std::abs(a)); ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return fc < fd ? c : d;
}

std::vector<RootEstimate> complex_roots(const ComplexFunction& f, double a, double b, int steps,
                                        double accept) {
  if (steps < 2) throw ContractError("complex_roots: at least two grid cells required");
  const double h = (b - a) / steps;
  std::vector<double> mag(static_cast<std::size_t>(steps) + 1);
  double scale = 0.0;
  for (int i = 0; i <= steps; ++i) {
    mag[static_cast<std::size_t>(i)] = std::abs(f(a + i * h));
    scale = std::max(scale, mag[static_cast<std::size_t>(i)]);
  }
  if (scale == 0.0) return {};  // identically zero along the line
  const RealFunction absf = [&f](double x) { return std::abs(f(x)); };
  std::vector<RootEstimate> out;
  for (int i = 0; i <= steps; ++i) {
    const auto s = static_cast<std::size_t>(i);
    const bool left_ok = i == 0 || mag[s] <= mag[s - 1];
    const bool right_ok = i == steps || mag[s] < mag[s + 1];
    if (!left_ok || !right_ok) continue;
    const double lo = std::max(a, a + (i - 1) * h), hi = std::min(b, a + (i + 1) * h);
    const double x = golden_minimize(absf, lo, hi);
    const double r = absf(x);
    if (r >= accept) continue;
    const double dh = 1e-6 * std::max(h, 1e-3);
    const double slope = std::abs(f(x + dh) - f(x - dh)) / (2.0 * dh) / scale;
    out.push_back({x, r, slope < tol::kDoubleRootSlope ? 2 : 1});
  }
  return out;
}

bool is_trivial_tau(double tau) {
  return tau <= tol::kTrivialRoot || tau >= 1.0 - tol::kTrivialRoot;
}

std::vector<RootEstimate> drop_trivial(std::vector<RootEstimate> roots,
                                       std::vector<RootEstimate>* trivial) {
  std::vector<RootEstimate> kept;
  for (auto& r : roots) {
    if (is_trivial_tau(r.x)) {
      if (trivial) trivial->push_back(r);
    } else {
      kept.push_back(r);
    }
  }
  return kept;
}

}  // namespace bosonlaw
