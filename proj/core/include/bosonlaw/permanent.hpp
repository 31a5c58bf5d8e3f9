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

#include "bosonlaw/interferometer.hpp"
#include "bosonlaw/occupation.hpp"
#include "bosonlaw/types.hpp"

namespace bosonlaw {

/// per(A) = sum over permutations s of prod_i A_{i,s(i)}.
///
/// Glynn's formula with the sign vectors visited in Gray-code order, so each
/// step updates the column sums by a single row: O(2^n n) operations. Sums are
/// carried in long double. The 0 x 0 permanent is 1. Throws ContractError for
/// a non-square argument and DomainError above n = 30.
Complex permanent(const ComplexMatrix& a);

/// The N x N matrix whose permanent gives <n|m>: row k of U repeated m_k times
/// and column l repeated n_l times, both in ascending mode order.
ComplexMatrix expand_submatrix(const Interferometer& u, const OccupationVector& m,
                               const OccupationVector& n);

}  // namespace bosonlaw
