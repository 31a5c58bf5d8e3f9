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

#include <span>
#include <string_view>

#include "bosonlaw/interferometer.hpp"
#include "bosonlaw/permutation.hpp"
#include "bosonlaw/phase_fit.hpp"
#include "bosonlaw/types.hpp"

namespace bosonlaw {

/// Transmissivity tau in [0, 1] (reflectivity rho = 1 - tau) and reflection phase phi.
struct BeamsplitterParams {
  double tau = 0.5;
  double phi = 0.0;
};

enum class TritterFamily { T1, T2 };

std::string_view to_string(TritterFamily family);

/// The two-parameter tritter families. T1 keeps tau_2 = 2/3, tau_3 = 1/2 and
/// all reflection phases pi/2, leaving (tau_1, theta); T2 keeps
/// tau_1 = tau_3 = 1/2 and the same phases, leaving (tau_2, theta).
struct TritterParams {
  TritterFamily family = TritterFamily::T1;
  double tau = 0.5;
  double theta = 0.0;
};

/// [[sqrt(tau), -sqrt(rho) e^{-i phi}], [sqrt(rho) e^{i phi}, sqrt(tau)]].
/// Throws DomainError for tau outside [0, 1].
Interferometer beamsplitter(const BeamsplitterParams& p);

/// The same matrix for an arbitrary complex transmissivity, principal square
/// roots, no unitarity check.
ComplexMatrix beamsplitter_matrix(Complex tau, double phi);

Interferometer tritter(const TritterParams& p);

/// Three-dimensional Fourier (Bell) multiport T_s.
Interferometer fourier_tritter();

/// The real orthogonal symmetric tritter with the same layout as T_s.
Interferometer real_symmetric_tritter();

/// Product of two balanced couplers, a 2/3 coupler and a phase plate e^{i theta}
/// on mode 3. Equal to T_s at theta = 0 and to the real symmetric tritter at
/// theta = pi/2 up to diagonal input and output phases.
Interferometer symmetric_tritter(double theta);

Interferometer permutation_multiport(const Permutation& sigma);

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);
Interferometer direct_sum(const Interferometer& a, const Interferometer& b);

/// Left-to-right matrix product parts[0] * parts[1] * ...; throws
/// ContractError on non-conformable dimensions. No unitarity requirement.
ComplexMatrix compose_matrices(std::span<const ComplexMatrix> parts);

/// Product of unitary parts; the result is re-certified as unitary.
Interferometer compose(std::span<const Interferometer> parts);

/// P_13 (1 (+) B(tau_s)) T_s^dagger with tau_s = (sqrt(3) + i)/4. B is not
/// unitary for a complex transmissivity, so the product is returned unchecked.
ComplexMatrix transposition_construction();

/// How far \p a is from \p target up to diagonal phases on its columns only.
DiagonalPhases match_output_phases(const ComplexMatrix& a, const ComplexMatrix& target);

/// How far \p a is from \p target up to diagonal phases on rows and columns.
DiagonalPhases match_two_sided_phases(const ComplexMatrix& a, const ComplexMatrix& target);

}  // namespace bosonlaw
