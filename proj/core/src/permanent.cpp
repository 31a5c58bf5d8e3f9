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
#include "bosonlaw/permanent.hpp"

#include <bit>
#include <complex>
#include <cstdint>
#include <vector>

#include "bosonlaw/errors.hpp"

namespace bosonlaw {

Complex permanent(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw ContractError("permanent of a non-square matrix");
  const auto n = static_cast<int>(a.rows());
  if (n == 0) return Complex(1.0, 0.0);
  if (n > 30) throw DomainError("permanent: matrix too large for subset enumeration");

  // Glynn: per(A) = 2^{1-n} sum_{delta, delta_0 = +1} (prod_k delta_k) prod_j sum_k delta_k A_kj,
  // with delta_1..delta_{n-1} visited in Gray-code order and extended precision sums.
  using Wide = std::complex<long double>;
  std::vector<Wide> col_sum(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    Wide s(0.0L, 0.0L);
    for (int k = 0; k < n; ++k) s += Wide(a(k, j).real(), a(k, j).imag());
    col_sum[static_cast<std::size_t>(j)] = s;
  }
  auto product = [&] {
    Wide p(1.0L, 0.0L);
    for (const auto& c : col_sum) p *= c;
    return p;
  };
  Wide total = product();
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  std::uint64_t gray = 0;
  long double sign = 1.0L;
  for (std::uint64_t step = 1; step < steps; ++step) {
    const int bit = std::countr_zero(step);
    gray ^= std::uint64_t{1} << bit;
    const int row = bit + 1;
    // Row flips from +1 to -1 when its Gray bit turns on, back when it turns off.
    const long double delta = (gray >> bit) & 1 ? -2.0L : 2.0L;
    for (int j = 0; j < n; ++j) {
      col_sum[static_cast<std::size_t>(j)] += delta * Wide(a(row, j).real(), a(row, j).imag());
    }
    sign = -sign;
    total += sign * product();
  }
  total /= static_cast<long double>(steps);
  return Complex(static_cast<double>(total.real()), static_cast<double>(total.imag()));
}

ComplexMatrix expand_submatrix(const Interferometer& u, const OccupationVector& m,
                               const OccupationVector& n) {
  if (m.modes() != u.modes() || n.modes() != u.modes()) {
    throw ContractError("occupation vectors must have one entry per interferometer mode");
  }
  if (m.total() != n.total()) {
    throw ContractError("photon numbers differ: " + m.to_string() + " -> " + n.to_string());
  }
  std::vector<Eigen::Index> rows, cols;
  for (std::size_t k = 0; k < m.modes(); ++k)
    for (int r = 0; r < m[k]; ++r) rows.push_back(static_cast<Eigen::Index>(k));
  for (std::size_t l = 0; l < n.modes(); ++l)
    for (int r = 0; r < n[l]; ++r) cols.push_back(static_cast<Eigen::Index>(l));
  const auto size = static_cast<Eigen::Index>(rows.size());
  ComplexMatrix out(size, size);
  for (Eigen::Index i = 0; i < size; ++i)
    for (Eigen::Index j = 0; j < size; ++j) out(i, j) = u.matrix()(rows[i], cols[j]);
  return out;
}

}  // namespace bosonlaw
