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
#include "bosonlaw/phase_fit.hpp"

#include <cmath>
#include <queue>

#include "bosonlaw/errors.hpp"

namespace bosonlaw {

namespace {

Complex unit(Complex z) {
  const double r = std::abs(z);
  return r > 0.0 ? z / r : Complex(1.0, 0.0);
}

double residual_of(const ComplexMatrix& a, const ComplexMatrix& b, const DiagonalPhases& p) {
  double sum = 0.0;
  for (Eigen::Index k = 0; k < a.rows(); ++k)
    for (Eigen::Index l = 0; l < a.cols(); ++l)
      sum += std::norm(p.row[static_cast<std::size_t>(k)] * a(k, l) *
                           p.col[static_cast<std::size_t>(l)] -
                       b(k, l));
  return std::sqrt(sum);
}

void check_shapes(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ContractError("phase fit: shape mismatch");
}

}  // namespace

DiagonalPhases fit_output_phases(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_shapes(a, b);
  DiagonalPhases p;
  p.row.assign(static_cast<std::size_t>(a.rows()), Complex(1.0, 0.0));
  p.col.resize(static_cast<std::size_t>(a.cols()));
  for (Eigen::Index l = 0; l < a.cols(); ++l)
    p.col[static_cast<std::size_t>(l)] = unit(a.col(l).dot(b.col(l)));  // conj(a) . b
  p.residual = residual_of(a, b, p);
  return p;
}

std::optional<DiagonalPhases> fit_two_sided_phases(const ComplexMatrix& a, const ComplexMatrix& b,
                                                   double anchor) {
  check_shapes(a, b);
  const auto rows = static_cast<std::size_t>(a.rows());
  const auto cols = static_cast<std::size_t>(a.cols());
  DiagonalPhases p;
  p.row.assign(rows, Complex(0.0, 0.0));
  p.col.assign(cols, Complex(0.0, 0.0));
  std::vector<bool> row_set(rows, false), col_set(cols, false);

  // Breadth-first propagation over the bipartite graph of anchor entries:
  // row_k = ratio_kl / col_l and col_l = ratio_kl / row_k.
  auto ratio = [&](std::size_t k, std::size_t l) {
    const auto kk = static_cast<Eigen::Index>(k);
    const auto ll = static_cast<Eigen::Index>(l);
    return unit(b(kk, ll) / a(kk, ll));
  };
  auto is_anchor = [&](std::size_t k, std::size_t l) {
    return std::abs(a(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l))) > anchor;
  };

  for (std::size_t seed = 0; seed < rows; ++seed) {
    if (row_set[seed]) continue;
    row_set[seed] = true;
    p.row[seed] = Complex(1.0, 0.0);
    // Queue entries: (is_row, index).
    std::queue<std::pair<bool, std::size_t>> queue;
    queue.emplace(true, seed);
    while (!queue.empty()) {
      const auto [is_row, idx] = queue.front();
      queue.pop();
      if (is_row) {
        for (std::size_t l = 0; l < cols; ++l) {
          if (col_set[l] || !is_anchor(idx, l)) continue;
          p.col[l] = ratio(idx, l) / p.row[idx];
          col_set[l] = true;
          queue.emplace(false, l);
        }
      } else {
        for (std::size_t k = 0; k < rows; ++k) {
          if (row_set[k] || !is_anchor(k, idx)) continue;
          p.row[k] = ratio(k, idx) / p.col[idx];
          row_set[k] = true;
          queue.emplace(true, k);
        }
      }
    }
  }
  for (std::size_t l = 0; l < cols; ++l)
    if (!col_set[l]) return std::nullopt;
  for (auto& z : p.row) z = unit(z);
  for (auto& z : p.col) z = unit(z);
  p.residual = residual_of(a, b, p);
  return p;
}

}  // namespace bosonlaw
