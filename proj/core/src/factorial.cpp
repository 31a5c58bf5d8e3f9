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
#include "bosonlaw/factorial.hpp"

#include <array>
#include <cmath>

#include "bosonlaw/errors.hpp"

namespace bosonlaw {

namespace {

constexpr std::array<std::uint64_t, kMaxExactFactorial + 1> make_table() {
  std::array<std::uint64_t, kMaxExactFactorial + 1> t{};
  t[0] = 1;
  for (int i = 1; i <= kMaxExactFactorial; ++i) t[i] = t[i - 1] * static_cast<std::uint64_t>(i);
  return t;
}

constexpr auto kTable = make_table();

}  // namespace

std::uint64_t factorial_exact(int n) {
  if (n < 0 || n > kMaxExactFactorial) throw DomainError("exact factorial needs 0 <= n <= 20");
  return kTable[static_cast<std::size_t>(n)];
}

double factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  if (n <= kMaxExactFactorial) return static_cast<double>(kTable[static_cast<std::size_t>(n)]);
  return std::tgamma(static_cast<double>(n) + 1.0);
}

}  // namespace bosonlaw
