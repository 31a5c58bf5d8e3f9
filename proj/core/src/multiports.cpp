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
#include "bosonlaw/multiports.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "bosonlaw/errors.hpp"
#include "bosonlaw/tolerances.hpp"

namespace bosonlaw {

namespace {

constexpr Complex kI(0.0, 1.0);

void check_tau(double tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw DomainError("transmissivity must lie in [0, 1], got " + std::to_string(tau));
  }
}

}  // namespace

std::string_view to_string(TritterFamily family) {
  return family == TritterFamily::T1 ? "T1" : "T2";
}

ComplexMatrix beamsplitter_matrix(Complex tau, double phi) {
  const Complex st = std::sqrt(tau);
  const Complex sr = std::sqrt(Complex(1.0, 0.0) - tau);
  ComplexMatrix b(2, 2);
  b << st, -sr * std::exp(-kI * phi), sr * std::exp(kI * phi), st;
  return b;
}

Interferometer beamsplitter(const BeamsplitterParams& p) {
  check_tau(p.tau);
  return Interferometer(beamsplitter_matrix(Complex(p.tau, 0.0), p.phi));
}

Interferometer tritter(const TritterParams& p) {
  check_tau(p.tau);
  const double tau = p.tau;
  const double rho = 1.0 - tau;
  const Complex e = std::exp(kI * p.theta);
  const double st = std::sqrt(tau), sr = std::sqrt(rho);
  ComplexMatrix t(3, 3);
  if (p.family == TritterFamily::T1) {
    const double s3r = std::sqrt(3.0 * rho), s3t = std::sqrt(3.0 * tau), s2 = std::sqrt(2.0);
    t << 2.0 * st, -st * e - kI * s3r, -st * e + kI * s3r,
         2.0 * sr, -sr * e + kI * s3t, -sr * e - kI * s3t,
         s2, s2 * e, s2 * e;
    t /= std::sqrt(6.0);
  } else {
    const double s2t = std::sqrt(2.0 * tau);
    t << s2t, -kI - sr * e, kI - sr * e,
         s2t, kI - sr * e, -kI - sr * e,
         2.0 * sr, s2t * e, s2t * e;
    t /= 2.0;
  }
  return Interferometer(std::move(t));
}

Interferometer fourier_tritter() {
  const double s3 = std::sqrt(3.0);
  const Complex w1 = -(1.0 + kI * s3) / 2.0;  // e^{-i 2pi/3}
  const Complex w2 = (-1.0 + kI * s3) / 2.0;  // e^{+i 2pi/3}
  ComplexMatrix t(3, 3);
  t << 1.0, w1, w2,
       1.0, w2, w1,
       1.0, 1.0, 1.0;
  return Interferometer(t / s3);
}

Interferometer real_symmetric_tritter() {
  const double s3 = std::sqrt(3.0);
  const double a = -(1.0 + s3) / 2.0;
  const double b = (-1.0 + s3) / 2.0;
  ComplexMatrix t(3, 3);
  t << 1.0, a, b,
       1.0, b, a,
       1.0, 1.0, 1.0;
  return Interferometer(t / s3);
}

Interferometer symmetric_tritter(double theta) {
  const double h = 1.0 / std::sqrt(2.0);
  ComplexMatrix a(3, 3), b(3, 3), c(3, 3), d(3, 3);
  a << -h, kI * h, 0.0,
       kI * h, -h, 0.0,
       0.0, 0.0, 1.0;
  const double c23 = std::sqrt(2.0 / 3.0), s13 = 1.0 / std::sqrt(3.0);
  b << c23, 0.0, kI * s13,
       0.0, 1.0, 0.0,
       kI * s13, 0.0, c23;
  c = ComplexMatrix::Identity(3, 3);
  c(2, 2) = std::exp(kI * theta);
  d << 1.0, 0.0, 0.0,
       0.0, h, -kI * h,
       0.0, kI * h, -h;
  return Interferometer(a * b * c * d);
}

Interferometer permutation_multiport(const Permutation& sigma) {
  return Interferometer(sigma.matrix());
}

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out = ComplexMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

Interferometer direct_sum(const Interferometer& a, const Interferometer& b) {
  return Interferometer(direct_sum(a.matrix(), b.matrix()));
}

ComplexMatrix compose_matrices(std::span<const ComplexMatrix> parts) {
  if (parts.empty()) throw ContractError("compose: no parts");
  ComplexMatrix out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (out.cols() != parts[i].rows()) {
      throw ContractError("compose: part " + std::to_string(i) + " is not conformable");
    }
    out = out * parts[i];
  }
  return out;
}

Interferometer compose(std::span<const Interferometer> parts) {
  std::vector<ComplexMatrix> mats;
  mats.reserve(parts.size());
  for (const auto& p : parts) mats.push_back(p.matrix());
  return Interferometer(compose_matrices(mats));
}

ComplexMatrix transposition_construction() {
  const Complex tau_s = (std::sqrt(3.0) + kI) / 4.0;
  const ComplexMatrix parts[] = {
      Permutation::from_cycles("(13)", 3).matrix(),
      direct_sum(ComplexMatrix::Identity(1, 1), beamsplitter_matrix(tau_s, 0.0)),
      fourier_tritter().matrix().adjoint(),
  };
  return compose_matrices(parts);
}

DiagonalPhases match_output_phases(const ComplexMatrix& a, const ComplexMatrix& target) {
  return fit_output_phases(a, target);
}

DiagonalPhases match_two_sided_phases(const ComplexMatrix& a, const ComplexMatrix& target) {
  auto fit = fit_two_sided_phases(a, target, tol::kPhaseAnchor);
  if (!fit) {
    DiagonalPhases none;
    none.residual = std::numeric_limits<double>::infinity();
    return none;
  }
  return *fit;
}

}  // namespace bosonlaw
