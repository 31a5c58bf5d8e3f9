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

#include "bosonlaw/tolerances.hpp"
#include "bosonlaw/types.hpp"

namespace bosonlaw {

/// max |(A A^dagger - I)_{ij}|.
double unitarity_residual(const ComplexMatrix& a);

/// An M-port linear-optical device: a^dagger_k = sum_l U_{kl} b^dagger_l, rows
/// index input ports and columns index output ports. Construction certifies
/// unitarity; every Interferometer in circulation is unitary.
class Interferometer {
 public:
  /// Throws ContractError if \p matrix is not square or fails U U^dagger = I
  /// within \p tolerance.
  explicit Interferometer(ComplexMatrix matrix, double tolerance = tol::kUnitarity);

  static Interferometer identity(std::size_t modes);

  std::size_t modes() const { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }
  Complex operator()(std::size_t input, std::size_t output) const {
    return matrix_(static_cast<Eigen::Index>(input), static_cast<Eigen::Index>(output));
  }

  Interferometer adjoint() const;

 private:
  ComplexMatrix matrix_;
};

}  // namespace bosonlaw
