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
#include "bosonlaw/interferometer.hpp"

#include <limits>
#include <sstream>

#include "bosonlaw/errors.hpp"

namespace bosonlaw {

double unitarity_residual(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  const ComplexMatrix d = a * a.adjoint() - ComplexMatrix::Identity(a.rows(), a.cols());
  return d.cwiseAbs().maxCoeff();
}

Interferometer::Interferometer(ComplexMatrix matrix, double tolerance) : matrix_(std::move(matrix)) {
  if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols()) {
    throw ContractError("interferometer matrix must be square and nonempty");
  }
  const double r = unitarity_residual(matrix_);
  if (!(r <= tolerance)) {
    std::ostringstream os;
    os << "matrix is not unitary: max |U U^dagger - I| = " << r << " > " << tolerance;
    throw ContractError(os.str());
  }
}

Interferometer Interferometer::identity(std::size_t modes) {
  const auto m = static_cast<Eigen::Index>(modes);
  return Interferometer(ComplexMatrix::Identity(m, m));
}

Interferometer Interferometer::adjoint() const { return Interferometer(matrix_.adjoint()); }

}  // namespace bosonlaw
