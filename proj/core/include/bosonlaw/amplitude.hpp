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

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "bosonlaw/interferometer.hpp"
#include "bosonlaw/occupation.hpp"
#include "bosonlaw/types.hpp"

namespace bosonlaw {

enum class AmplitudeMethod { Permanent, Tables, Recurrence };

std::string_view to_string(AmplitudeMethod method);

/// A transition amplitude <n|m> together with the evaluator that produced it.
/// |value| <= 1 + 1e-9 holds for every amplitude built from a unitary.
struct Amplitude {
  Complex value;
  AmplitudeMethod method;
};

/// per(expand_submatrix(U, m, n)) / sqrt(m! n!).
Amplitude amp_permanent(const Interferometer& u, const OccupationVector& m,
                        const OccupationVector& n);

/// (N! / sqrt(m! n!)) sum_S P(S|m,n) prod_{k,l} U_{kl}^{S_kl}, summed over the
/// contingency tables with margins (m, n).
Amplitude amp_tables(const Interferometer& u, const OccupationVector& m,
                     const OccupationVector& n);

/// Photon-by-photon elimination of the output modes 2..M through the
/// derivative recurrence of the generating function, closed with the
/// single-mode amplitude <n_1, 0, ..., 0|m'> = sqrt(n_1!/m'!) prod_k U_{k1}^{m'_k}.
/// Modes are eliminated from M down to 2.
Amplitude amp_recurrence(const Interferometer& u, const OccupationVector& m,
                         const OccupationVector& n);

/// As above, eliminating the modes in \p order (0-based, a permutation of
/// 1..M-1). The result does not depend on the order.
Amplitude amp_recurrence(const Interferometer& u, const OccupationVector& m,
                         const OccupationVector& n, std::span<const std::size_t> order);

/// Working state of the recurrence. The generating function G_m(x) is never
/// expanded as a polynomial; only the coefficients of the reduced inputs m'
/// survive, and equal m' reached along different branches share one entry.
class RecurrenceState {
 public:
  RecurrenceState(const Interferometer& u, const OccupationVector& m);

  /// Applies d/dx_l once: coefficient of m' feeds sqrt(m'_k) U_{kl} into m' - 1_k.
  void differentiate(std::size_t output_mode);
  /// Multiplies every coefficient by \p factor (the 1/sqrt(n_l!) normalization).
  void scale(double factor);
  /// sum_{m'} c(m') sqrt(n_1!/m'!) prod_k U_{k1}^{m'_k}, with n_1 = |m'|.
  Complex close() const;

  const std::map<OccupationVector, Complex>& coefficients() const { return coefficients_; }
  /// Output photons still to be eliminated, (mode, count) pairs.
  std::vector<std::pair<std::size_t, int>>& pending_outputs() { return pending_; }

 private:
  const Interferometer* u_;
  std::map<OccupationVector, Complex> coefficients_;
  std::vector<std::pair<std::size_t, int>> pending_;
};

/// The factor in front of the suppression function,
/// sqrt(n_1!/(n_S! m!)) prod_k U_{k1}^{m_k - |n_S|}. Negative exponents are
/// accepted when U_{k1} != 0; nullopt when a needed U_{k1} vanishes.
std::optional<Complex> suppression_prefactor(const Interferometer& u, const OccupationVector& m,
                                             const OccupationVector& n);

/// f = <n|m> / [sqrt(n_1!/(n_S! m!)) prod_k U_{k1}^{m_k - |n_S|}].
///
/// Returns nullopt (not factorizable) when some exponent m_k - |n_S| is
/// negative, or when U_{k1} = 0 carries a positive exponent; callers then
/// work with the raw amplitude, which has the same interior zeros.
std::optional<Complex> suppression_factorize(const Interferometer& u, const OccupationVector& m,
                                             const OccupationVector& n);

}  // namespace bosonlaw
