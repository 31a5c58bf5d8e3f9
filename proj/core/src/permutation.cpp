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
#include "bosonlaw/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "bosonlaw/errors.hpp"

namespace bosonlaw {

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t v : image_) {
    if (v >= image_.size() || seen[v]) throw ContractError("not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t size) {
  std::vector<std::size_t> id(size);
  std::iota(id.begin(), id.end(), std::size_t{0});
  return Permutation(std::move(id));
}

Permutation Permutation::from_cycles(std::string_view cycles, std::size_t size) {
  std::vector<std::size_t> image(size);
  std::iota(image.begin(), image.end(), std::size_t{0});
  std::vector<std::size_t> cycle;
  bool open = false;
  for (char c : cycles) {
    if (c == '(') {
      if (open) throw ContractError("nested '(' in cycle notation");
      open = true;
      cycle.clear();
    } else if (c == ')') {
      if (!open) throw ContractError("unbalanced ')' in cycle notation");
      for (std::size_t i = 0; i < cycle.size(); ++i) image[cycle[i]] = cycle[(i + 1) % cycle.size()];
      open = false;
    } else if (c >= '1' && c <= '9') {
      const auto label = static_cast<std::size_t>(c - '1');
      if (!open || label >= size) throw ContractError("bad cycle notation '" + std::string(cycles) + "'");
      cycle.push_back(label);
    } else if (c != ' ' && c != ',') {
      throw ContractError("bad cycle notation '" + std::string(cycles) + "'");
    }
  }
  if (open) throw ContractError("unterminated cycle");
  return Permutation(std::move(image));
}

std::vector<Permutation> Permutation::all(std::size_t size) {
  std::vector<std::size_t> image(size);
  std::iota(image.begin(), image.end(), std::size_t{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

ComplexMatrix Permutation::matrix() const {
  const auto n = static_cast<Eigen::Index>(image_.size());
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  const Permutation inv = inverse();
  for (std::size_t i = 0; i < image_.size(); ++i)
    p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(inv(i))) = 1.0;
  return p;
}

OccupationVector Permutation::apply(const OccupationVector& v) const {
  if (v.modes() != image_.size()) throw ContractError("permutation and occupation sizes differ");
  const Permutation inv = inverse();
  std::vector<int> out(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) out[i] = v[inv(i)];
  return OccupationVector(std::move(out));
}

std::string Permutation::to_string() const {
  std::string s;
  std::vector<bool> done(image_.size(), false);
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (done[start] || image_[start] == start) continue;
    s += '(';
    for (std::size_t i = start; !done[i]; i = image_[i]) {
      done[i] = true;
      s += std::to_string(i + 1);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

}  // namespace bosonlaw
