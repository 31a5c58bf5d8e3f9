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

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bosonlaw/occupation.hpp"
#include "bosonlaw/suppression_law.hpp"
#include "bosonlaw/types.hpp"

namespace bosonlaw::cli {

inline constexpr std::string_view kSchemaLine = "# bosonlaw-schema v1";

// A number that failed re-verification; exits with status 3.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

// Output file or stdout could not be written; exits with status 2.
class OutputError : public std::runtime_error {
 public:
  explicit OutputError(const std::string& what) : std::runtime_error(what) {}
};

enum class Format { Csv, Json };

// Shortest round-trip decimal form.
std::string number(double x);

// "2,1,0" or a family with bindings, "m,m,m:m=4", "n1,1,1:n1=3".
OccupationVector parse_occupation(std::string_view text);

std::vector<int> parse_int_list(std::string_view text);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void comment(std::string_view text);
  void row(const std::vector<std::string>& fields);

 private:
  std::ostream& out_;
};

// Comma-separated fields, quoted where needed.
std::string csv_field(std::string_view text);

std::string occupation_field(const OccupationVector& v);
std::string classification_field(const Classification& c);

// Columns shared by every law table.
std::vector<std::string> law_columns();
std::vector<std::string> law_row(std::string_view family, const OccupationVector& input,
                                 const OccupationVector& output, int size_param, const LawRoot& root,
                                 std::string_view provenance);

nlohmann::json to_json(const OccupationVector& v);
nlohmann::json to_json(Complex z);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const LawRoot& root);
nlohmann::json to_json(const SuppressionLaw& law);

// Writes \p text to \p path ("-" is stdout) in one piece.
void emit(const std::string& path, const std::string& text);

}  // namespace bosonlaw::cli
