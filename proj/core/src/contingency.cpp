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
#include "bosonlaw/contingency.hpp"

#include "bosonlaw/errors.hpp"
#include "bosonlaw/factorial.hpp"

namespace bosonlaw {

ContingencyTable::ContingencyTable(std::size_t modes, std::vector<int> row_major)
    : modes_(modes), entries_(std::move(row_major)) {
  if (entries_.size() != modes_ * modes_) throw ContractError("table must be M x M");
  for (int e : entries_) {
    if (e < 0) throw ContractError("table entries must be nonnegative");
  }
}

OccupationVector ContingencyTable::row_margins() const {
  std::vector<int> r(modes_, 0);
  for (std::size_t k = 0; k < modes_; ++k)
    for (std::size_t l = 0; l < modes_; ++l) r[k] += (*this)(k, l);
  return OccupationVector(std::move(r));
}

OccupationVector ContingencyTable::column_margins() const {
  std::vector<int> c(modes_, 0);
  for (std::size_t k = 0; k < modes_; ++k)
    for (std::size_t l = 0; l < modes_; ++l) c[l] += (*this)(k, l);
  return OccupationVector(std::move(c));
}

namespace {

void check_margins(const OccupationVector& m, const OccupationVector& n) {
  if (m.modes() != n.modes()) throw ContractError("margins have different numbers of modes");
  if (m.total() != n.total()) {
    throw ContractError("margin sums differ: " + m.to_string() + " vs " + n.to_string());
  }
}

struct Enumerator {
  const OccupationVector& rows;
  std::vector<int> col_left;
  ContingencyTable table;
  const std::function<void(const ContingencyTable&)>& visit;

  // Fills cell (k, l) given that row k still needs row_left photons.
  void cell(std::size_t k, std::size_t l, int row_left) {
    const std::size_t m = table.modes();
    if (k == m) {
      visit(table);
      return;
    }
    if (l + 1 == m) {
      // Last column of the row is forced.
      if (row_left > col_left[l]) return;
      table(k, l) = row_left;
      col_left[l] -= row_left;
      cell(k + 1, 0, k + 1 < m ? rows[k + 1] : 0);
      col_left[l] += row_left;
      table(k, l) = 0;
      return;
    }
    // Capacity of the columns to the right bounds how little we may place here.
    int right_capacity = 0;
    for (std::size_t j = l + 1; j < m; ++j) right_capacity += col_left[j];
    const int lo = std::max(0, row_left - right_capacity);
    const int hi = std::min(row_left, col_left[l]);
    for (int s = lo; s <= hi; ++s) {
      table(k, l) = s;
      col_left[l] -= s;
      cell(k, l + 1, row_left - s);
      col_left[l] += s;
    }
    table(k, l) = 0;
  }
};

}  // namespace

void for_each_table(const OccupationVector& m, const OccupationVector& n,
                    const std::function<void(const ContingencyTable&)>& visit) {
  check_margins(m, n);
  const std::size_t modes = m.modes();
  if (modes == 0) return;
  Enumerator e{m, std::vector<int>(n.counts().begin(), n.counts().end()), ContingencyTable(modes),
               visit};
  e.cell(0, 0, m[0]);
}

std::vector<ContingencyTable> tables_with_margins(const OccupationVector& m,
                                                  const OccupationVector& n) {
  std::vector<ContingencyTable> out;
  for_each_table(m, n, [&](const ContingencyTable& t) { out.push_back(t); });
  return out;
}

double fisher_yates(const ContingencyTable& table, const OccupationVector& m,
                    const OccupationVector& n) {
  check_margins(m, n);
  if (table.modes() != m.modes() || table.row_margins() != m || table.column_margins() != n) {
    throw ContractError("table does not have the requested margins");
  }
  // Interleave multiplications and divisions to stay well inside double range.
  const std::size_t modes = m.modes();
  double w = 1.0 / factorial(m.total());
  for (std::size_t k = 0; k < modes; ++k) {
    w *= factorial(m[k]) * factorial(n[k]);
    for (std::size_t l = 0; l < modes; ++l) w /= factorial(table(k, l));
  }
  return w;
}

}  // namespace bosonlaw
