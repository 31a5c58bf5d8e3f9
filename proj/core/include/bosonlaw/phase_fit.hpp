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
#include <vector>

#include "bosonlaw/types.hpp"

namespace bosonlaw {

/// Diagonal unitary factors with row_k * A_{kl} * col_l ~ B_{kl}.
struct DiagonalPhases {
  std::vector<Complex> row;
  std::vector<Complex> col;
  /// Frobenius norm of D_row A D_col - B.
  double residual = 0.0;
};

/// Best column phases alone: col_l = phase(<A_l, B_l>), rows left at 1.
DiagonalPhases fit_output_phases(const ComplexMatrix& a, const ComplexMatrix& b);

/// Solves row_k A_{kl} col_l = B_{kl} by propagating phases along the entries
/// with |A_{kl}| > anchor (a spanning forest of the bipartite row/column graph),
/// then measures the residual over every entry. Returns nullopt when some row
/// or column has no anchor entry or when |B_{kl}| and |A_{kl}| disagree so
/// badly that no unit-modulus ratio exists. The residual is always reported;
/// the caller decides the acceptance threshold.
std::optional<DiagonalPhases> fit_two_sided_phases(const ComplexMatrix& a, const ComplexMatrix& b,
                                                   double anchor);

}  // namespace bosonlaw
