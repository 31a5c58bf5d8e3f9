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
#include <functional>
#include <vector>

#include "bosonlaw/occupation.hpp"

namespace bosonlaw {

/// M x M table of nonnegative counts S_{kl}: photons that enter port k and
/// leave through port l.
class ContingencyTable {
 public:
  explicit ContingencyTable(std::size_t modes) : modes_(modes), entries_(modes * modes, 0) {}
  ContingencyTable(std::size_t modes, std::vector<int> row_major);

  std::size_t modes() const { return modes_; }
  int operator()(std::size_t k, std::size_t l) const { return entries_[k * modes_ + l]; }
  int& operator()(std::size_t k, std::size_t l) { return entries_[k * modes_ + l]; }

  OccupationVector row_margins() const;
  OccupationVector column_margins() const;

  friend bool operator==(const ContingencyTable&, const ContingencyTable&) = default;

 private:
  std::size_t modes_;
  std::vector<int> entries_;
};

/// Visits every table with row margins \p m and column margins \p n exactly
/// once, row-major, pruning on the remaining column capacity.
void for_each_table(const OccupationVector& m, const OccupationVector& n,
                    const std::function<void(const ContingencyTable&)>& visit);

std::vector<ContingencyTable> tables_with_margins(const OccupationVector& m,
                                                  const OccupationVector& n);

/// Fisher-Yates weight (1/N!) prod_{k,l} m_k! n_l! / S_{kl}!. The weights of
/// all tables sharing the margins sum to one.
double fisher_yates(const ContingencyTable& table, const OccupationVector& m,
                    const OccupationVector& n);

}  // namespace bosonlaw
