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

#include <string>
#include <string_view>
#include <vector>

#include "bosonlaw/multiports.hpp"
#include "bosonlaw/root_scan.hpp"
#include "bosonlaw/suppression_law.hpp"
#include "bosonlaw/tritter_laws.hpp"

namespace bosonlaw {

/// The five tabulated amplitude cases: <n1,1,0|m,m,m>, <n1,1,1|n1,1,1>,
/// <n1,2,0|n1,1,1>, <n1,1,1|m,m,m>, <n1,2,0|m,m,m>.
enum class Table1Row { N10_II, N11_I, N20_I, N11_II, N20_II };

enum class ThetaCase { Zero, Pi, HalfPi, MinusHalfPi };

inline constexpr Table1Row kTable1Rows[] = {Table1Row::N10_II, Table1Row::N11_I, Table1Row::N20_I,
                                            Table1Row::N11_II, Table1Row::N20_II};
inline constexpr ThetaCase kThetaCases[] = {ThetaCase::Zero, ThetaCase::Pi, ThetaCase::HalfPi,
                                            ThetaCase::MinusHalfPi};

std::string_view to_string(Table1Row row);
std::string_view to_string(ThetaCase theta);
double theta_value(ThetaCase theta);
InputFamily row_input(Table1Row row);
OutputFamily row_output(Table1Row row);

struct Table1Entry {
  Table1Row row = Table1Row::N10_II;
  TritterFamily family = TritterFamily::T1;
  ThetaCase theta = ThetaCase::Zero;
  int size = 1;
  std::string expression;     // the tabulated formula, or the suppression function it defers to
  bool numeric = false;       // roots located on the suppression function, not tabulated
  std::string resolution;     // how an ambiguous expression was read, empty otherwise
  std::vector<double> roots;  // nontrivial, ascending
  SuppressionLaw law;         // verified with amp_permanent
};

/// Evaluates one cell of the tritter table for a size parameter (n1 for the
/// (n1,1,1) inputs, m for (m,m,m)). Throws DomainError when the size lies
/// outside the cell's validity range; the message names the restriction.
Table1Entry table1_entry(Table1Row row, TritterFamily family, ThetaCase theta, int size);

std::vector<double> table1_roots(Table1Row row, TritterFamily family, ThetaCase theta, int size);

/// Nontrivial zeros in tau of the closed-form suppression function at fixed theta.
std::vector<RootEstimate> numeric_tritter_roots(TritterFamily family, InputFamily input,
                                                OutputFamily output, double theta, int size,
                                                int steps = 2000);

}  // namespace bosonlaw
