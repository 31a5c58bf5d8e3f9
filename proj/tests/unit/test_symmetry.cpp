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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bosonlaw/amplitude.hpp"
#include "bosonlaw/beamsplitter_laws.hpp"
#include "bosonlaw/multiports.hpp"
#include "bosonlaw/symmetry.hpp"
#include "bosonlaw/table1.hpp"
#include "bosonlaw/tolerances.hpp"
#include "oracles.hpp"
#include "symmetry_rows.hpp"

namespace bosonlaw {
namespace {

using Kind = Classification::Kind;

TEST(Spectrum, CycleRootsOfUnity) {
  const auto s = permutation_spectrum(Permutation::from_cycles("(123)", 3));
  ASSERT_EQ(s.size(), 3u);
  Complex product(1.0, 0.0);
  for (const auto& v : s) {
    EXPECT_NEAR(std::abs(v), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(std::pow(v, 3) - 1.0), 0.0, 1e-14);
    product *= v;
  }
  EXPECT_NEAR(std::abs(product - 1.0), 0.0, 1e-14);
  const auto t = permutation_spectrum(Permutation::from_cycles("(12)", 3));
  int minus = 0;
  for (const auto& v : t) minus += std::abs(v + 1.0) < 1e-15;
  EXPECT_EQ(minus, 1);
}

TEST(Factorization, IdentityIsTrivial) {
  std::mt19937_64 rng(7);
  const auto u = oracle::haar_unitary(3, rng);
  const auto pair = solve_phase_factorization(u, Permutation::identity(3), SymmetrySide::Input);
  ASSERT_TRUE(pair);
  EXPECT_LT(pair->residual, 1e-12);
  EXPECT_FALSE(predict_suppressed(*pair, {2, 1, 3}));
}

TEST(Factorization, FourierCycle) {
  const auto pair = solve_phase_factorization(fourier_tritter(), Permutation::from_cycles("(123)", 3), SymmetrySide::Input);
  ASSERT_TRUE(pair);
  EXPECT_LT(pair->residual, tol::kPhase);
  for (int m = 1; m <= 5; ++m) {
    EXPECT_TRUE(predict_suppressed(*pair, {3 * m - 2, 2, 0}));
    EXPECT_FALSE(predict_suppressed(*pair, {3 * m, 0, 0}));
  }
}

TEST(Factorization, GenericDeviceHasNoSymmetry) {
  const auto u = tritter({TritterFamily::T1, 0.37, 0.9});
  for (const auto& sigma : Permutation::all(3)) {
    if (sigma.is_identity()) continue;
    for (auto side : {SymmetrySide::Input, SymmetrySide::Output}) {
      EXPECT_FALSE(solve_phase_factorization(u, sigma, side)) << sigma.to_string() << " " << to_string(side);
    }
  }
  EXPECT_EQ(classify_configuration(u, {2, 2, 2}, {4, 1, 1}).kind, Kind::BeyondSymmetry);
}

TEST(Factorization, ReconstructionHolds) {
  // P U = Z U Lambda on the input side, U P^dagger = Lambda^* U Z^* on the output side.
  for (const auto& row : fixture::symmetry_rows(0.7)) {
    const auto sigma = Permutation::from_cycles(row.sigma, 3);
    const auto pair = solve_phase_factorization(row.u, sigma, row.side);
    ASSERT_TRUE(pair) << row.device << " " << row.sigma;
    ComplexMatrix z = ComplexMatrix::Zero(3, 3), lam = ComplexMatrix::Zero(3, 3);
    for (int k = 0; k < 3; ++k) {
      z(k, k) = pair->z[static_cast<std::size_t>(k)];
      lam(k, k) = pair->lambda[static_cast<std::size_t>(k)];
    }
    const ComplexMatrix& u = row.u.matrix();
    const ComplexMatrix p = sigma.matrix();
    const double err = row.side == SymmetrySide::Input ? (p * u - z * u * lam).norm()
                                                       : (u * p.adjoint() - lam.conjugate() * u * z.conjugate()).norm();
    EXPECT_LT(err, 1e-9) << row.device << " " << row.sigma;
  }
}

TEST(Factorization, TabulatedEigenphases) {
  for (const auto& row : fixture::symmetry_rows(0.7)) {
    const auto sigma = Permutation::from_cycles(row.sigma, 3);
    const auto pair = factor_with_eigenphases(row.u, sigma, row.side, row.lambda);
    ASSERT_TRUE(pair) << row.device << " " << row.sigma;
    EXPECT_LT(pair->residual, tol::kPhase);
    for (const auto& claim : row.claims) {
      for (int size = 1; size <= 6; ++size) {
        const auto m = family_input(claim.input, size);
        const auto n = family_output(claim.input, claim.output, size);
        const auto& fixed = row.side == SymmetrySide::Input ? m : n;
        if (sigma.apply(fixed) != fixed) continue;
        const bool predicted = predict_suppressed(*pair, row.side == SymmetrySide::Input ? n : m);
        const double amplitude = std::abs(amp_permanent(row.u, m, n).value);
        if (predicted) {
          EXPECT_LT(amplitude, 1e-10) << row.device << " " << n.to_string() << "|" << m.to_string();
        }
        if (!claim.odd_only || n[0] % 2 == 1) {
          EXPECT_TRUE(predicted) << row.device << " " << row.sigma << " " << n.to_string() << "|" << m.to_string();
        }
      }
    }
  }
}

TEST(Factorization, RejectsWrongEigenphases) {
  const Complex one(1.0, 0.0), minus(-1.0, 0.0);
  EXPECT_FALSE(factor_with_eigenphases(fourier_tritter(), Permutation::from_cycles("(123)", 3), SymmetrySide::Input,
                                       {one, minus, one}));
}

TEST(SymmetryPhase, GaugeInvariant) {
  const auto sigma = Permutation::from_cycles("(123)", 3);
  auto pair = *solve_phase_factorization(fourier_tritter(), sigma, SymmetrySide::Input);
  const OccupationVector m{2, 2, 2}, n{4, 2, 0};
  const Complex before = symmetry_phase(pair, m, n);
  const Complex c = std::polar(1.0, 0.8);
  for (auto& z : pair.z) z *= c;
  for (auto& l : pair.lambda) l /= c;
  EXPECT_LT(std::abs(symmetry_phase(pair, m, n) - before), 1e-12);
}

TEST(Classify, HongOuMandelCovered) {
  const auto c = classify_configuration(beamsplitter({0.5, 0.0}), {1, 1}, {1, 1});
  EXPECT_EQ(c.kind, Kind::CoveredBySymmetry);
  ASSERT_TRUE(c.sigma);
  EXPECT_EQ(c.sigma->to_string(), "(12)");
}

TEST(Classify, UnequalInputsBeyond) {
  for (int m1 = 1; m1 <= 4; ++m1) {
    for (int m2 = 1; m2 <= 4; ++m2) {
      auto law = bs_law_single(m1, m2);
      classify_law(law);
      EXPECT_EQ(law.classification.kind, m1 == m2 ? Kind::CoveredBySymmetry : Kind::BeyondSymmetry)
          << m1 << "," << m2;
    }
  }
}

TEST(Classify, FourierLawCoveredSecondRootBeyond) {
  for (int m = 2; m <= 6; ++m) {
    const auto e = table1_entry(Table1Row::N20_II, TritterFamily::T2, ThetaCase::Zero, m);
    ASSERT_EQ(e.law.roots.size(), 2u);
    auto law = e.law;
    classify_law(law);
    EXPECT_EQ(law.roots[0].classification.kind, Kind::CoveredBySymmetry);
    EXPECT_EQ(law.roots[1].classification.kind, Kind::BeyondSymmetry);
    EXPECT_EQ(law.classification.kind, Kind::BeyondSymmetry);
  }
}

TEST(Classify, CoveredImpliesZero) {
  std::mt19937_64 rng(11);
  for (const auto& row : fixture::symmetry_rows(1.1)) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto m = oracle::random_occupation(3, 4, rng);
      const auto n = oracle::random_occupation(3, 4, rng);
      if (classify_configuration(row.u, m, n).kind == Kind::CoveredBySymmetry) {
        EXPECT_LT(std::abs(amp_permanent(row.u, m, n).value), 1e-10);
      }
    }
  }
}

TEST(Classify, EmptyLawUnclassified) {
  SuppressionLaw law;
  classify_law(law);
  EXPECT_EQ(law.classification.kind, Kind::Unclassified);
}

}  // namespace
}  // namespace bosonlaw
