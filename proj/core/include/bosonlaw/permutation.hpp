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
#include <string>
#include <string_view>
#include <vector>

#include "bosonlaw/occupation.hpp"
#include "bosonlaw/types.hpp"

namespace bosonlaw {

/// A bijection on mode indices, stored 0-based as image[i] = sigma(i).
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> image);

  static Permutation identity(std::size_t size);
  /// Cycle notation on 1-based labels: "(123)", "(12)(3)", "()" for identity.
  static Permutation from_cycles(std::string_view cycles, std::size_t size);
  /// Every permutation of \p size elements, identity first.
  static std::vector<Permutation> all(std::size_t size);

  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t i) const { return image_[i]; }
  Permutation inverse() const;
  bool is_identity() const;

  /// P_sigma with (P x)_i = x_{sigma^{-1}(i)}, i.e. P(i, sigma^{-1}(i)) = 1.
  ComplexMatrix matrix() const;
  /// The occupation with the same action: result_i = v_{sigma^{-1}(i)}.
  OccupationVector apply(const OccupationVector& v) const;

  /// Cycle notation with 1-based labels, fixed points omitted.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

}  // namespace bosonlaw
