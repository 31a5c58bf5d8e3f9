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

#include <optional>
#include <string_view>
#include <vector>

#include "bosonlaw/interferometer.hpp"
#include "bosonlaw/occupation.hpp"
#include "bosonlaw/permutation.hpp"
#include "bosonlaw/suppression_law.hpp"
#include "bosonlaw/types.hpp"

namespace bosonlaw {

/// Input side: P_sigma U = Z U Lambda. Output side: U P_sigma^dagger = Lambda^* U Z^*.
enum class SymmetrySide { Input, Output };

std::string_view to_string(SymmetrySide side);

struct PhasePair {
  Permutation sigma = Permutation::identity(1);
  SymmetrySide side = SymmetrySide::Input;
  std::vector<Complex> z;
  std::vector<Complex> lambda;
  double residual = 0.0;  // Frobenius norm of the reconstruction error
};

/// Eigenvalues of P_sigma: for each cycle of length L, the L-th roots of unity.
std::vector<Complex> permutation_spectrum(const Permutation& sigma);

/// Factors the phase ratio between U and its permuted copy into diagonal
/// phases. The gauge (Z, Lambda) -> (cZ, Lambda/c), applied independently on
/// each block U decomposes into, is fixed so that the entries of Lambda are
/// the eigenvalues of P_sigma when possible, preferring Lambda_1 = 1; otherwise
/// Lambda_1 = 1. Returns nullopt when the reconstruction residual exceeds
/// tol::kPhase.
std::optional<PhasePair> solve_phase_factorization(const Interferometer& u, const Permutation& sigma,
                                                   SymmetrySide side);

/// Factorization with Lambda prescribed: only Z is fitted. Returns nullopt when
/// the reconstruction residual exceeds tol::kPhase.
std::optional<PhasePair> factor_with_eigenphases(const Interferometer& u, const Permutation& sigma,
                                                 SymmetrySide side, const std::vector<Complex>& lambda);
/// |prod_l Lambda_l^{n_l} - 1| > tol::kEigenProduct.
bool predict_suppressed(const PhasePair& pair, const OccupationVector& occupation);

/// The gauge-invariant phase picked up by <n|m> under the symmetry:
/// prod_k z_k^{m_k} prod_l lambda_l^{n_l} (input side) or
/// prod_k lambda_k^{m_k} prod_l z_l^{n_l} (output side). The symmetry forces
/// the amplitude to vanish when this differs from 1.
Complex symmetry_phase(const PhasePair& pair, const OccupationVector& m, const OccupationVector& n);

/// Searches S_M for a permutation fixing the input (input side) or the output
/// (output side) under which U factors and the amplitude is forced to vanish.
Classification classify_configuration(const Interferometer& u, const OccupationVector& m,
                                      const OccupationVector& n);

/// Classifies every root of \p law and the law as a whole: covered when every
/// root is covered, beyond otherwise.
void classify_law(SuppressionLaw& law);

}  // namespace bosonlaw
