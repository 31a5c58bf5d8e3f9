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
#include "bosonlaw/amplitude.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "bosonlaw/contingency.hpp"
#include "bosonlaw/errors.hpp"
#include "bosonlaw/factorial.hpp"
#include "bosonlaw/permanent.hpp"

namespace bosonlaw {

namespace {

constexpr double kAmplitudeBound = 1.0 + 1e-9;

void check_config(const Interferometer& u, const OccupationVector& m, const OccupationVector& n) {
  if (m.modes() != u.modes() || n.modes() != u.modes()) {
    throw ContractError("occupation vectors must have " + std::to_string(u.modes()) + " modes");
  }
  if (m.total() != n.total()) {
    throw ContractError("photon numbers differ: " + m.to_string() + " -> " + n.to_string());
  }
}

Amplitude make(Complex value, AmplitudeMethod method) {
  if (!(std::abs(value) <= kAmplitudeBound)) {
    std::ostringstream os;
    os << to_string(method) << " amplitude has modulus " << std::abs(value) << " > 1";
    throw std::logic_error(os.str());
  }
  return Amplitude{value, method};
}

// z^e with z^0 = 1 even for z = 0.
Complex ipow(Complex z, int e) {
  Complex r(1.0, 0.0);
  if (e < 0) {
    z = 1.0 / z;
    e = -e;
  }
  while (e > 0) {
    if (e & 1) r *= z;
    z *= z;
    e >>= 1;
  }
  return r;
}

}  // namespace

std::string_view to_string(AmplitudeMethod method) {
  switch (method) {
    case AmplitudeMethod::Permanent: return "permanent";
    case AmplitudeMethod::Tables: return "tables";
    case AmplitudeMethod::Recurrence: return "recurrence";
  }
  return "?";
}

Amplitude amp_permanent(const Interferometer& u, const OccupationVector& m,
                        const OccupationVector& n) {
  check_config(u, m, n);
  const Complex per = permanent(expand_submatrix(u, m, n));
  return make(per / std::sqrt(m.factorial_product() * n.factorial_product()),
              AmplitudeMethod::Permanent);
}

Amplitude amp_tables(const Interferometer& u, const OccupationVector& m,
                     const OccupationVector& n) {
  check_config(u, m, n);
  Complex sum(0.0, 0.0);
  const std::size_t modes = u.modes();
  for_each_table(m, n, [&](const ContingencyTable& s) {
    Complex term(fisher_yates(s, m, n), 0.0);
    for (std::size_t k = 0; k < modes; ++k)
      for (std::size_t l = 0; l < modes; ++l) term *= ipow(u(k, l), s(k, l));
    sum += term;
  });
  const double norm = factorial(m.total()) / std::sqrt(m.factorial_product() * n.factorial_product());
  return make(norm * sum, AmplitudeMethod::Tables);
}

RecurrenceState::RecurrenceState(const Interferometer& u, const OccupationVector& m) : u_(&u) {
  coefficients_.emplace(m, Complex(1.0, 0.0));
}

void RecurrenceState::differentiate(std::size_t output_mode) {
  std::map<OccupationVector, Complex> next;
  for (const auto& [reduced, c] : coefficients_) {
    for (std::size_t k = 0; k < reduced.modes(); ++k) {
      if (reduced[k] == 0) continue;
      const Complex w = c * std::sqrt(static_cast<double>(reduced[k])) * (*u_)(k, output_mode);
      next[reduced.decrement(k)] += w;
    }
  }
  coefficients_ = std::move(next);
}

void RecurrenceState::scale(double factor) {
  for (auto& entry : coefficients_) entry.second *= factor;
}

Complex RecurrenceState::close() const {
  Complex sum(0.0, 0.0);
  for (const auto& [reduced, c] : coefficients_) {
    const int n1 = reduced.total();
    Complex term = c * std::sqrt(factorial(n1) / reduced.factorial_product());
    for (std::size_t k = 0; k < reduced.modes(); ++k) term *= ipow((*u_)(k, 0), reduced[k]);
    sum += term;
  }
  return sum;
}

Amplitude amp_recurrence(const Interferometer& u, const OccupationVector& m,
                         const OccupationVector& n) {
  std::vector<std::size_t> order;
  for (std::size_t l = u.modes(); l-- > 1;) order.push_back(l);
  return amp_recurrence(u, m, n, order);
}

Amplitude amp_recurrence(const Interferometer& u, const OccupationVector& m,
                         const OccupationVector& n, std::span<const std::size_t> order) {
  check_config(u, m, n);
  std::vector<bool> seen(u.modes(), false);
  if (order.size() + 1 != u.modes()) throw ContractError("elimination order must list modes 2..M");
  for (std::size_t l : order) {
    if (l == 0 || l >= u.modes() || seen[l]) throw ContractError("bad elimination order");
    seen[l] = true;
  }
  RecurrenceState state(u, m);
  for (std::size_t l : order) state.pending_outputs().emplace_back(l, n[l]);
  for (auto& [mode, left] : state.pending_outputs()) {
    const int photons = left;
    for (; left > 0; --left) state.differentiate(mode);
    state.scale(1.0 / std::sqrt(factorial(photons)));
  }
  return make(state.close(), AmplitudeMethod::Recurrence);
}

std::optional<Complex> suppression_prefactor(const Interferometer& u, const OccupationVector& m,
                                             const OccupationVector& n) {
  check_config(u, m, n);
  const int ns = n.tail_total();
  double tail_fact = 1.0;
  for (std::size_t l = 1; l < n.modes(); ++l) tail_fact *= factorial(n[l]);
  Complex p(std::sqrt(factorial(n[0]) / (tail_fact * m.factorial_product())), 0.0);
  for (std::size_t k = 0; k < m.modes(); ++k) {
    const int e = m[k] - ns;
    if (e == 0) continue;
    if (u(k, 0) == Complex(0.0, 0.0)) return std::nullopt;
    p *= ipow(u(k, 0), e);
  }
  return p;
}

std::optional<Complex> suppression_factorize(const Interferometer& u, const OccupationVector& m,
                                             const OccupationVector& n) {
  check_config(u, m, n);
  const int ns = n.tail_total();
  for (std::size_t k = 0; k < m.modes(); ++k)
    if (m[k] < ns) return std::nullopt;
  const auto pre = suppression_prefactor(u, m, n);
  if (!pre || *pre == Complex(0.0, 0.0)) return std::nullopt;
  return amp_recurrence(u, m, n).value / *pre;
}

}  // namespace bosonlaw
