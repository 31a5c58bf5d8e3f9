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
#include "bosonlaw/occupation.hpp"

#include <charconv>
#include <numeric>

#include "bosonlaw/errors.hpp"
#include "bosonlaw/factorial.hpp"

namespace bosonlaw {

OccupationVector::OccupationVector(std::vector<int> counts) : counts_(std::move(counts)) {
  for (int c : counts_) {
    if (c < 0) throw ContractError("occupation counts must be nonnegative");
  }
}

OccupationVector::OccupationVector(std::initializer_list<int> counts)
    : OccupationVector(std::vector<int>(counts)) {}

OccupationVector OccupationVector::parse(std::string_view text) {
  std::vector<int> counts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || end != field.data() + field.size()) {
      throw ContractError("bad occupation vector '" + std::string(text) + "'");
    }
    counts.push_back(value);
    pos = comma + 1;
  }
  return OccupationVector(std::move(counts));
}

int OccupationVector::total() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

int OccupationVector::tail_total() const {
  return counts_.empty() ? 0 : total() - counts_.front();
}

OccupationVector OccupationVector::decrement(std::size_t mode) const {
  if (mode >= counts_.size() || counts_[mode] < 1) {
    throw ContractError("cannot remove a photon from empty mode " + std::to_string(mode + 1));
  }
  OccupationVector out = *this;
  --out.counts_[mode];
  return out;
}

OccupationVector OccupationVector::increment(std::size_t mode) const {
  if (mode >= counts_.size()) throw ContractError("mode index out of range");
  OccupationVector out = *this;
  ++out.counts_[mode];
  return out;
}

double OccupationVector::factorial_product() const {
  double p = 1.0;
  for (int c : counts_) p *= factorial(c);
  return p;
}

std::string OccupationVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(counts_[i]);
  }
  return s + ")";
}

namespace {

void fill(std::vector<int>& prefix, std::size_t modes, int remaining,
          std::vector<OccupationVector>& out) {
  if (prefix.size() + 1 == modes) {
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int c = remaining; c >= 0; --c) {
    prefix.push_back(c);
    fill(prefix, modes, remaining - c, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<OccupationVector> all_occupations(std::size_t modes, int photons) {
  std::vector<OccupationVector> out;
  if (modes == 0) return out;
  std::vector<int> prefix;
  fill(prefix, modes, photons, out);
  return out;
}

}  // namespace bosonlaw
