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

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bosonlaw {

/// Photon counts per mode of a Fock state |m_1, ..., m_M>.
class OccupationVector {
 public:
  OccupationVector() = default;
  explicit OccupationVector(std::vector<int> counts);
  OccupationVector(std::initializer_list<int> counts);

  /// Parses "2,1,0" (whitespace tolerated).
  static OccupationVector parse(std::string_view text);

  std::size_t modes() const { return counts_.size(); }
  int operator[](std::size_t mode) const { return counts_[mode]; }
  std::span<const int> counts() const { return counts_; }

  /// Total photon number N.
  int total() const;
  /// Photons outside the first mode, |n_S| = n_2 + ... + n_M.
  int tail_total() const;

  /// This vector with one photon removed from \p mode; requires counts[mode] >= 1.
  OccupationVector decrement(std::size_t mode) const;
  OccupationVector increment(std::size_t mode) const;

  /// m_1! m_2! ... m_M! as a double.
  double factorial_product() const;

  std::string to_string() const;

  friend auto operator<=>(const OccupationVector&, const OccupationVector&) = default;
  friend bool operator==(const OccupationVector&, const OccupationVector&) = default;

 private:
  std::vector<int> counts_;
};

/// Every occupation vector of \p photons bosons over \p modes modes, in
/// lexicographically descending order of the first mode.
std::vector<OccupationVector> all_occupations(std::size_t modes, int photons);

}  // namespace bosonlaw
