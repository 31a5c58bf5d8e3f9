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
#include "bosonlaw/beamsplitter_laws.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "bosonlaw/errors.hpp"

namespace bosonlaw {

namespace {

void check_inputs(int m1, int m2, int minimum) {
  if (m1 < 0 || m2 < 0) throw ContractError("photon numbers must be nonnegative");
  if (m1 + m2 < minimum) {
    throw ContractError("need at least " + std::to_string(minimum) + " input photons");
  }
}

}  // namespace

OccupationVector bs_output(int m1, int m2, int secondary, OutputOrder order) {
  const int n = m1 + m2;
  return order == OutputOrder::N1First ? OccupationVector{n - secondary, secondary}
                                       : OccupationVector{secondary, n - secondary};
}

std::vector<std::int64_t> bs_suppression_poly(int m1, int m2, int secondary, OutputOrder order) {
  check_inputs(m1, m2, std::max(secondary, 1));
  if (order == OutputOrder::N2First) std::swap(m1, m2);
  const std::int64_t a = m1, n = static_cast<std::int64_t>(m1) + m2;
  if (secondary == 1) return {-a, n};
  if (secondary == 2) return {a * (a - 1), -2 * a * (n - 1), n * (n - 1)};
  throw NotImplementedError("closed-form beamsplitter laws exist only for one or two secondary photons");
}

double evaluate_poly(const std::vector<std::int64_t>& coefficients, double x) {
  double acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc = acc * x + static_cast<double>(*it);
  }
  return acc;
}

SuppressionLaw bs_law_single(int m1, int m2, OutputOrder order) {
  check_inputs(m1, m2, 1);
  const int top = order == OutputOrder::N1First ? m1 : m2;
  const double tau = static_cast<double>(top) / (m1 + m2);
  Provenance prov{Provenance::Kind::ClosedForm,
                  order == OutputOrder::N1First ? "tau=m1/(m1+m2)" : "tau=m2/(m1+m2)", 0.0};
  return make_law({DeviceFamily::Beamsplitter, 0.0}, {m1, m2}, bs_output(m1, m2, 1, order),
                  {root_at(tau)}, std::move(prov));
}

SuppressionLaw bs_law_double(int m1, int m2, OutputOrder order) {
  check_inputs(m1, m2, 2);
  int a = m1, b = m2;
  if (order == OutputOrder::N2First) std::swap(a, b);
  const double n = a + b;
  const double centre = a * (n - 1.0);
  const double disc = static_cast<double>(a) * b * (n - 1.0);
  const double denom = n * (n - 1.0);
  std::vector<LawRoot> roots;
  if (disc == 0.0) {
    roots.push_back(root_at(centre / denom, 0.0, 2));
  } else {
    const double s = std::sqrt(disc);
    roots.push_back(root_at((centre - s) / denom));
    roots.push_back(root_at((centre + s) / denom));
  }
  Provenance prov{Provenance::Kind::ClosedForm,
                  order == OutputOrder::N1First ? "tau=(m1/N)(1+-sqrt((m2/m1)/(N-1)))"
                                                : "tau=(m2/N)(1+-sqrt((m1/m2)/(N-1)))",
                  0.0};
  return make_law({DeviceFamily::Beamsplitter, 0.0}, {m1, m2}, bs_output(m1, m2, 2, order), roots,
                  std::move(prov));
}

}  // namespace bosonlaw
