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

#include "bosonlaw/amplitude.hpp"
#include "bosonlaw/beamsplitter_laws.hpp"
#include "bosonlaw/errors.hpp"
#include "bosonlaw/multiports.hpp"

namespace bosonlaw {
namespace {

TEST(SingleLaw, HongOuMandel) {
  const auto law = bs_law_single(1, 1);
  ASSERT_EQ(law.roots.size(), 1u);
  EXPECT_DOUBLE_EQ(law.roots[0].tau, 0.5);
  EXPECT_EQ(law.output, (OccupationVector{1, 1}));
  EXPECT_EQ(law.provenance.kind, Provenance::Kind::ClosedForm);
}

TEST(SingleLaw, TwoFifths) {
  const auto law = bs_law_single(2, 3);
  ASSERT_EQ(law.roots.size(), 1u);
  EXPECT_NEAR(law.roots[0].tau, 0.4, 1e-15);
  EXPECT_LT(law.roots[0].amplitude, 1e-10);
}

TEST(SingleLaw, EmptyFirstPortIsTrivial) {
  const auto law = bs_law_single(0, 3);
  EXPECT_TRUE(law.roots.empty());
  ASSERT_EQ(law.trivial_roots.size(), 1u);
  EXPECT_EQ(law.trivial_roots[0].tau, 0.0);
}

TEST(SingleLaw, NoPhotons) { EXPECT_THROW(bs_law_single(0, 0), ContractError); }

TEST(SingleLaw, SwappedOrder) {
  const auto law = bs_law_single(2, 3, OutputOrder::N2First);
  EXPECT_EQ(law.output, (OccupationVector{1, 4}));
  ASSERT_EQ(law.roots.size(), 1u);
  EXPECT_NEAR(law.roots[0].tau, 0.6, 1e-15);
}

TEST(SingleLaw, WholeFamilyVerified) {
  for (int m1 = 1; m1 <= 8; ++m1) {
    for (int m2 = 1; m1 + m2 <= 12; ++m2) {
      for (auto order : {OutputOrder::N1First, OutputOrder::N2First}) {
        const auto law = bs_law_single(m1, m2, order);
        for (const auto& r : law.roots) {
          EXPECT_LT(std::abs(amp_permanent(beamsplitter({r.tau, 0.3}), law.input, law.output).value), 1e-10);
        }
      }
    }
  }
}

TEST(DoubleLaw, FourPhotons) {
  const auto law = bs_law_double(1, 3);
  ASSERT_EQ(law.roots.size(), 1u);
  EXPECT_NEAR(law.roots[0].tau, 0.5, 1e-15);
  ASSERT_EQ(law.trivial_roots.size(), 1u);
  EXPECT_NEAR(law.trivial_roots[0].tau, 0.0, 1e-15);
  EXPECT_LT(std::abs(amp_permanent(beamsplitter({0.5, 0.0}), {1, 3}, {2, 2}).value), 1e-15);
}

TEST(DoubleLaw, BalancedPairs) {
  const auto law = bs_law_double(2, 2);
  ASSERT_EQ(law.roots.size(), 2u);
  EXPECT_NEAR(law.roots[0].tau, 0.5 * (1 - 1 / std::sqrt(3.0)), 1e-15);
  EXPECT_NEAR(law.roots[1].tau, 0.5 * (1 + 1 / std::sqrt(3.0)), 1e-15);
}

TEST(DoubleLaw, NoReflectedPhotons) {
  const auto law = bs_law_double(2, 0);
  EXPECT_TRUE(law.roots.empty());
  ASSERT_EQ(law.trivial_roots.size(), 1u);
  EXPECT_EQ(law.trivial_roots[0].multiplicity, 2);
  EXPECT_NEAR(law.trivial_roots[0].tau, 1.0, 1e-15);
}

TEST(DoubleLaw, TooFewPhotons) { EXPECT_THROW(bs_law_double(1, 0), ContractError); }

TEST(DoubleLaw, WholeFamilyVerified) {
  for (int m1 = 1; m1 <= 10; ++m1) {
    for (int m2 = 1; m1 + m2 <= 12; ++m2) {
      for (auto order : {OutputOrder::N1First, OutputOrder::N2First}) {
        const auto law = bs_law_double(m1, m2, order);
        for (const auto& r : law.roots) {
          EXPECT_GT(r.tau, 0.0);
          EXPECT_LT(r.tau, 1.0);
          EXPECT_LT(std::abs(amp_permanent(beamsplitter({r.tau, 0.0}), law.input, law.output).value), 1e-10);
        }
      }
    }
  }
}

TEST(Polynomial, LinearCoefficients) {
  EXPECT_EQ(bs_suppression_poly(1, 1, 1), (std::vector<std::int64_t>{-1, 2}));
  EXPECT_EQ(bs_suppression_poly(2, 3, 1), (std::vector<std::int64_t>{-2, 5}));
}

TEST(Polynomial, QuadraticCoefficients) {
  // 12 tau^2 - 6 tau
  const auto p = bs_suppression_poly(1, 3, 2);
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[0], 0);
  EXPECT_EQ(p[1] * 2, -p[2]);
  EXPECT_EQ(p[2] % 12, 0);
}

TEST(Polynomial, InterchangedOrder) {
  EXPECT_EQ(bs_suppression_poly(3, 1, 2, OutputOrder::N2First), bs_suppression_poly(1, 3, 2));
  EXPECT_EQ(bs_suppression_poly(3, 1, 1, OutputOrder::N2First), bs_suppression_poly(1, 3, 1));
}

TEST(Polynomial, RootsMatchLaws) {
  for (int m1 = 1; m1 <= 6; ++m1) {
    for (int m2 = 1; m2 <= 6; ++m2) {
      for (const auto& r : bs_law_double(m1, m2).roots) {
        const auto p = bs_suppression_poly(m1, m2, 2);
        EXPECT_NEAR(evaluate_poly(p, r.tau) / static_cast<double>(p[2]), 0.0, 1e-12);
      }
      EXPECT_NEAR(evaluate_poly(bs_suppression_poly(m1, m2, 1), bs_law_single(m1, m2).roots[0].tau), 0.0, 1e-12);
    }
  }
}

TEST(Polynomial, ThreeSecondaryUnsupported) { EXPECT_THROW(bs_suppression_poly(2, 3, 3), NotImplementedError); }

TEST(MakeLaw, RejectsUnsuppressedRoot) {
  DeviceSpec bs;
  EXPECT_THROW(make_law(bs, {1, 1}, {1, 1}, {root_at(0.3)}, {}), DomainError);
}

}  // namespace
}  // namespace bosonlaw
