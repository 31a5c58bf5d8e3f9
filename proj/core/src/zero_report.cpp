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
#include "bosonlaw/zero_report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "bosonlaw/amplitude.hpp"
#include "bosonlaw/errors.hpp"
#include "bosonlaw/multiports.hpp"
#include "bosonlaw/root_scan.hpp"
#include "bosonlaw/tolerances.hpp"

namespace bosonlaw {

double bs_real_amplitude(const OccupationVector& m, const OccupationVector& n, double tau) {
  return amp_tables(beamsplitter({tau, 0.0}), m, n).value.real();
}

ZeroReport bs_zero_report(const OccupationVector& m, const OccupationVector& n, int grid_steps) {
  if (m.modes() != 2 || n.modes() != 2) throw ContractError("zero report needs two-mode configurations");
  if (m.total() != n.total()) throw ContractError("input and output photon numbers differ");
  if (grid_steps < 1000) throw ContractError("zero report needs at least 1000 grid steps");
  const RealFunction f = [&](double tau) { return bs_real_amplitude(m, n, tau); };
  ZeroReport report;
  report.amplitude_at_0 = f(0.0);
  report.amplitude_at_1 = f(1.0);
  for (const auto& r : drop_trivial(real_roots(f, 0.0, 1.0, grid_steps, tol::kBisection))) {
    report.zero_locations.push_back(r.x);
    report.max_bracket = std::max(report.max_bracket, r.bracket);
  }
  report.count = static_cast<int>(report.zero_locations.size());
  return report;
}

InterlaceResult check_interlacing(const OccupationVector& m, const OccupationVector& n,
                                  const OccupationVector& n_shifted, int grid_steps) {
  if (n.modes() != 2 || n_shifted.modes() != 2 || n.total() != n_shifted.total() ||
      std::abs(n[0] - n_shifted[0]) != 1) {
    throw ContractError("outputs " + n.to_string() + " and " + n_shifted.to_string() +
                        " do not differ by one boson");
  }
  const auto a = bs_zero_report(m, n, grid_steps).zero_locations;
  const auto b = bs_zero_report(m, n_shifted, grid_steps).zero_locations;
  std::vector<std::pair<double, char>> merged;
  for (double x : a) merged.emplace_back(x, 'a');
  for (double x : b) merged.emplace_back(x, 'b');
  std::sort(merged.begin(), merged.end());
  InterlaceResult result{true, {}};
  std::ostringstream order;
  order.precision(12);
  for (std::size_t i = 0; i < merged.size(); ++i) {
    order << (i ? " " : "") << merged[i].second << ":" << merged[i].first;
    if (i > 0 && (merged[i].second == merged[i - 1].second ||
                  std::abs(merged[i].first - merged[i - 1].first) < tol::kTrivialRoot)) {
      result.interlaced = false;
    }
  }
  result.witness = order.str();
  return result;
}

}  // namespace bosonlaw
