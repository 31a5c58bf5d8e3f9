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
#include "bosonlaw/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "bosonlaw/errors.hpp"
#include "bosonlaw/phase_fit.hpp"
#include "bosonlaw/tolerances.hpp"

namespace bosonlaw {

namespace {

constexpr double kAnchor = 1e-8;

Complex ipow(Complex z, int e) {
  Complex r(1.0, 0.0);
  for (int i = 0; i < e; ++i) r *= z;
  return r;
}

// Connected blocks of the bipartite graph rows <-> columns over anchor entries.
std::vector<int> column_blocks(const ComplexMatrix& u, std::vector<int>& row_block) {
  const auto n = static_cast<std::size_t>(u.rows());
  std::vector<int> col_block(n, -1);
  row_block.assign(n, -1);
  int next = 0;
  for (std::size_t seed = 0; seed < n; ++seed) {
    if (row_block[seed] >= 0) continue;
    std::vector<std::size_t> stack{seed};
    row_block[seed] = next;
    while (!stack.empty()) {
      const std::size_t k = stack.back();
      stack.pop_back();
      for (std::size_t l = 0; l < n; ++l) {
        if (col_block[l] >= 0 || std::abs(u(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l))) <= kAnchor)
          continue;
        col_block[l] = next;
        for (std::size_t k2 = 0; k2 < n; ++k2) {
          if (row_block[k2] < 0 &&
              std::abs(u(static_cast<Eigen::Index>(k2), static_cast<Eigen::Index>(l))) > kAnchor) {
            row_block[k2] = next;
            stack.push_back(k2);
          }
        }
      }
    }
    ++next;
  }
  return col_block;
}

bool same_multiset(std::vector<Complex> a, std::vector<Complex> b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    auto it = std::find_if(b.begin(), b.end(), [&](const Complex& y) { return std::abs(x - y) < tol::kEigenProduct; });
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

double reconstruction_residual(const ComplexMatrix& u, const PhasePair& p) {
  const auto n = u.rows();
  const ComplexMatrix ps = p.sigma.matrix();
  ComplexMatrix zd = ComplexMatrix::Zero(n, n), ld = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    zd(i, i) = p.z[static_cast<std::size_t>(i)];
    ld(i, i) = p.lambda[static_cast<std::size_t>(i)];
  }
  if (p.side == SymmetrySide::Input) return (ps * u - zd * u * ld).norm();
  return (u * ps.adjoint() - ld.conjugate() * u * zd.conjugate()).norm();
}

}  // namespace

std::string_view to_string(SymmetrySide side) { return side == SymmetrySide::Input ? "input" : "output"; }

std::vector<Complex> permutation_spectrum(const Permutation& sigma) {
  std::vector<Complex> out;
  std::vector<bool> seen(sigma.size(), false);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = sigma(j)) {
      seen[j] = true;
      ++len;
    }
    for (int k = 0; k < len; ++k) out.push_back(std::polar(1.0, 2.0 * kPi * k / len));
  }
  return out;
}

std::optional<PhasePair> solve_phase_factorization(const Interferometer& u, const Permutation& sigma,
                                                   SymmetrySide side) {
  if (sigma.size() != u.modes()) throw ContractError("permutation size does not match the device");
  const ComplexMatrix& a = u.matrix();
  const ComplexMatrix ps = sigma.matrix();
  const ComplexMatrix b = side == SymmetrySide::Input ? ComplexMatrix(ps * a) : ComplexMatrix(a * ps.adjoint());
  const auto fit = fit_two_sided_phases(a, b, kAnchor);
  if (!fit) return std::nullopt;

  PhasePair pair;
  pair.sigma = sigma;
  pair.side = side;
  if (side == SymmetrySide::Input) {
    pair.z = fit->row;
    pair.lambda = fit->col;
  } else {
    // Rows carry Lambda^*, columns Z^*; Lambda lives on the input modes.
    for (const auto& r : fit->row) pair.lambda.push_back(std::conj(r));
    for (const auto& c : fit->col) pair.z.push_back(std::conj(c));
  }

  // Gauge: per block, Lambda -> Lambda / c and Z -> c Z (input side) or the
  // conjugate pair on the output side; both keep the reconstruction.
  std::vector<int> row_block;
  const std::vector<int> col_block = column_blocks(a, row_block);
  const std::vector<int>& lambda_block = side == SymmetrySide::Input ? col_block : row_block;
  const std::vector<int>& z_block = side == SymmetrySide::Input ? row_block : col_block;
  const int blocks = 1 + *std::max_element(lambda_block.begin(), lambda_block.end());
  const auto spectrum = permutation_spectrum(sigma);

  std::vector<std::vector<Complex>> options(static_cast<std::size_t>(blocks));
  for (std::size_t l = 0; l < pair.lambda.size(); ++l) {
    for (const auto& e : spectrum) options[static_cast<std::size_t>(lambda_block[l])].push_back(pair.lambda[l] / e);
  }
  std::vector<Complex> best_shift;
  int best_rank = 3;  // 0: spectrum and Lambda_1 = 1, 1: spectrum only
  std::vector<Complex> shift(static_cast<std::size_t>(blocks));
  std::function<void(int)> search = [&](int blk) {
    if (best_rank == 0) return;
    if (blk == blocks) {
      std::vector<Complex> lam = pair.lambda;
      for (std::size_t l = 0; l < lam.size(); ++l) lam[l] /= shift[static_cast<std::size_t>(lambda_block[l])];
      if (!same_multiset(lam, spectrum)) return;
      const int rank = std::abs(lam[0] - 1.0) < tol::kEigenProduct ? 0 : 1;
      if (rank < best_rank) {
        best_rank = rank;
        best_shift = shift;
      }
      return;
    }
    for (const auto& c : options[static_cast<std::size_t>(blk)]) {
      shift[static_cast<std::size_t>(blk)] = c;
      search(blk + 1);
    }
  };
  search(0);
  if (best_shift.empty()) {
    best_shift.assign(static_cast<std::size_t>(blocks), Complex(1.0, 0.0));
    best_shift[static_cast<std::size_t>(lambda_block[0])] = pair.lambda[0];
  }
  for (std::size_t l = 0; l < pair.lambda.size(); ++l) pair.lambda[l] /= best_shift[static_cast<std::size_t>(lambda_block[l])];
  for (std::size_t k = 0; k < pair.z.size(); ++k) pair.z[k] *= best_shift[static_cast<std::size_t>(z_block[k])];

  pair.residual = reconstruction_residual(a, pair);
  if (!(pair.residual < tol::kPhase)) return std::nullopt;
  return pair;
}

std::optional<PhasePair> factor_with_eigenphases(const Interferometer& u, const Permutation& sigma,
                                                 SymmetrySide side, const std::vector<Complex>& lambda) {
  if (sigma.size() != u.modes() || lambda.size() != u.modes()) {
    throw ContractError("permutation or eigenphase count does not match the device");
  }
  const ComplexMatrix& a = u.matrix();
  const ComplexMatrix ps = sigma.matrix();
  const Eigen::Index n = a.rows();
  PhasePair pair;
  pair.sigma = sigma;
  pair.side = side;
  pair.lambda = lambda;
  pair.z.assign(static_cast<std::size_t>(n), Complex(1.0, 0.0));
  if (side == SymmetrySide::Input) {
    // (P U)_{kl} = z_k U_{kl} lambda_l, read off at the largest entry of row k.
    const ComplexMatrix b = ps * a;
    for (Eigen::Index k = 0; k < n; ++k) {
      Eigen::Index l = 0;
      a.row(k).cwiseAbs().maxCoeff(&l);
      pair.z[static_cast<std::size_t>(k)] = b(k, l) / (a(k, l) * lambda[static_cast<std::size_t>(l)]);
    }
  } else {
    // (U P^dagger)_{kl} = conj(lambda_k) U_{kl} conj(z_l), read off per column.
    const ComplexMatrix b = a * ps.adjoint();
    for (Eigen::Index l = 0; l < n; ++l) {
      Eigen::Index k = 0;
      a.col(l).cwiseAbs().maxCoeff(&k);
      pair.z[static_cast<std::size_t>(l)] =
          std::conj(b(k, l) / (std::conj(lambda[static_cast<std::size_t>(k)]) * a(k, l)));
    }
  }
  for (auto& z : pair.z) z /= std::abs(z);
  pair.residual = reconstruction_residual(a, pair);
  if (!(pair.residual < tol::kPhase)) return std::nullopt;
  return pair;
}

bool predict_suppressed(const PhasePair& pair, const OccupationVector& occupation) {
  if (occupation.modes() != pair.lambda.size()) throw ContractError("occupation length does not match");
  Complex prod(1.0, 0.0);
  for (std::size_t l = 0; l < occupation.modes(); ++l) prod *= ipow(pair.lambda[l], occupation[l]);
  return std::abs(prod - 1.0) > tol::kEigenProduct;
}

Complex symmetry_phase(const PhasePair& pair, const OccupationVector& m, const OccupationVector& n) {
  Complex prod(1.0, 0.0);
  const auto& in_phase = pair.side == SymmetrySide::Input ? pair.z : pair.lambda;
  const auto& out_phase = pair.side == SymmetrySide::Input ? pair.lambda : pair.z;
  for (std::size_t k = 0; k < m.modes(); ++k) prod *= ipow(in_phase[k], m[k]);
  for (std::size_t l = 0; l < n.modes(); ++l) prod *= ipow(out_phase[l], n[l]);
  return prod;
}

Classification classify_configuration(const Interferometer& u, const OccupationVector& m,
                                      const OccupationVector& n) {
  Classification c;
  c.kind = Classification::Kind::BeyondSymmetry;
  for (const auto& sigma : Permutation::all(u.modes())) {
    if (sigma.is_identity()) continue;
    for (const SymmetrySide side : {SymmetrySide::Input, SymmetrySide::Output}) {
      const OccupationVector& fixed = side == SymmetrySide::Input ? m : n;
      if (sigma.apply(fixed) != fixed) continue;
      const auto pair = solve_phase_factorization(u, sigma, side);
      if (!pair) continue;
      if (std::abs(symmetry_phase(*pair, m, n) - 1.0) <= tol::kEigenProduct) continue;
      c.kind = Classification::Kind::CoveredBySymmetry;
      c.sigma = sigma;
      c.side = std::string(to_string(side));
      c.lambda = pair->lambda;
      return c;
    }
  }
  return c;
}

void classify_law(SuppressionLaw& law) {
  if (law.roots.empty()) {
    law.classification = {};
    return;
  }
  bool all_covered = true;
  Classification first_covered;
  for (auto& root : law.roots) {
    root.classification = classify_configuration(device_at(law.device, root.tau, root.theta), law.input, law.output);
    if (root.classification.kind == Classification::Kind::CoveredBySymmetry) {
      if (!first_covered.sigma) first_covered = root.classification;
    } else {
      all_covered = false;
    }
  }
  if (all_covered) {
    law.classification = first_covered;
  } else {
    law.classification = {};
    law.classification.kind = Classification::Kind::BeyondSymmetry;
  }
}

}  // namespace bosonlaw
