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
#include "bosonlaw/distinguishability.hpp"

#include <cmath>
#include <sstream>

#include "bosonlaw/amplitude.hpp"
#include "bosonlaw/errors.hpp"
#include "bosonlaw/tolerances.hpp"

namespace bosonlaw {

std::pair<double, double> partial_coefficients(const Interferometer& u, const OccupationVector& m,
                                               const OccupationVector& n, std::size_t port) {
  if (port >= m.modes()) throw ContractError("source port out of range");
  if (m[port] < 1) throw ContractError("no photon at the partially distinguishable source port");
  if (m.total() != n.total()) throw ContractError("input and output photon numbers differ");
  const double same = std::norm(amp_permanent(u, m, n).value);
  const OccupationVector reduced_in = m.decrement(port);
  double split = 0.0;
  for (std::size_t l = 0; l < n.modes(); ++l) {
    if (n[l] == 0) continue;
    split += std::norm(u(port, l)) * std::norm(amp_permanent(u, reduced_in, n.decrement(l)).value);
  }
  return {same, split};
}

double partial_probability(const Interferometer& u, const OccupationVector& m,
                           const OccupationVector& n, const PartialSource& src) {
  if (!(src.alpha >= 0.0 && src.alpha <= kPi / 2 + 1e-15)) {
    throw ContractError("alpha must lie in [0, pi/2]");
  }
  const auto [a, b] = partial_coefficients(u, m, n, src.port);
  const double c = std::cos(src.alpha), s = std::sin(src.alpha);
  return c * c * a + s * s * b;
}

SurvivalResult law_survives(const Interferometer& u, const OccupationVector& m,
                            const OccupationVector& n, std::size_t port) {
  const double at_zero = std::abs(amp_permanent(u, m, n).value);
  if (!(at_zero < tol::kZeroAmplitude)) {
    std::ostringstream msg;
    msg << "not a suppression law: |<" << n.to_string() << "|" << m.to_string() << ">| = " << at_zero;
    throw ContractError(msg.str());
  }
  SurvivalResult r;
  r.alpha = kPi / 4;
  r.probability = partial_probability(u, m, n, {port, r.alpha});
  r.survives = r.probability < tol::kZeroAmplitude;
  return r;
}

std::vector<std::pair<double, double>> probability_sweep(const Interferometer& u,
                                                         const OccupationVector& m,
                                                         const OccupationVector& n,
                                                         std::size_t port, int steps) {
  if (steps < 1) throw ContractError("sweep needs at least one step");
  const auto [a, b] = partial_coefficients(u, m, n, port);
  std::vector<std::pair<double, double>> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i) {
    const double alpha = kPi / 2 * i / steps;
    const double c = std::cos(alpha), s = std::sin(alpha);
    out.emplace_back(alpha, c * c * a + s * s * b);
  }
  return out;
}

std::array<double, 3> tritter_breaking_conditions(int n1, double tau) {
  const double n = n1, s3 = std::sqrt(3.0);
  const double root = std::sqrt(tau * (1.0 - tau)), r1 = std::sqrt(1.0 - tau);
  return {(n + 1) * root + s3 * (n + 1) * tau - s3 * n, (n + 1) * root - s3 * (n + 1) * tau + s3 * n,
          4 * (n + 1) * tau * r1 - 3 * r1};
}

}  // namespace bosonlaw
