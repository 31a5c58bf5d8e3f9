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

#include "io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <iostream>
#include <ostream>

#include "bosonlaw/errors.hpp"

namespace bosonlaw::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool parse_int(std::string_view s, int& value) {
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  return ec == std::errc{} && ptr == end;
}

}  // namespace

std::string number(double x) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), ptr);
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (auto tok : split(text, ',')) {
    int v = 0;
    if (!parse_int(tok, v)) throw ContractError("not an integer list: '" + std::string(text) + "'");
    out.push_back(v);
  }
  return out;
}

OccupationVector parse_occupation(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return OccupationVector::parse(text);

  std::map<std::string, int, std::less<>> bindings;
  for (auto binding : split(text.substr(colon + 1), ',')) {
    const auto eq = binding.find('=');
    int v = 0;
    if (eq == std::string_view::npos || !parse_int(trim(binding.substr(eq + 1)), v)) {
      throw ContractError("bad binding '" + std::string(binding) + "' in '" + std::string(text) + "'");
    }
    bindings[std::string(trim(binding.substr(0, eq)))] = v;
  }
  std::vector<int> counts;
  for (auto tok : split(text.substr(0, colon), ',')) {
    int v = 0;
    if (parse_int(tok, v)) {
      counts.push_back(v);
      continue;
    }
    const auto it = bindings.find(tok);
    if (it == bindings.end()) {
      throw ContractError("unbound name '" + std::string(tok) + "' in '" + std::string(text) + "'");
    }
    counts.push_back(it->second);
  }
  return OccupationVector(std::move(counts));
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void CsvWriter::comment(std::string_view text) { out_ << "# " << text << '\n'; }

void CsvWriter::row(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ << ',';
    out_ << csv_field(fields[i]);
  }
  out_ << '\n';
}

std::string occupation_field(const OccupationVector& v) { return v.to_string(); }

std::string classification_field(const Classification& c) {
  std::string s(to_string(c.kind));
  if (c.sigma) s += ":" + c.sigma->to_string() + ":" + c.side;
  return s;
}

std::vector<std::string> law_columns() {
  return {"family", "input", "output", "size_param", "tau", "theta", "residual", "provenance", "classification"};
}

std::vector<std::string> law_row(std::string_view family, const OccupationVector& input,
                                 const OccupationVector& output, int size_param, const LawRoot& root,
                                 std::string_view provenance) {
  return {std::string(family),
          occupation_field(input),
          occupation_field(output),
          std::to_string(size_param),
          number(root.tau),
          number(root.theta),
          number(root.amplitude),
          std::string(provenance),
          classification_field(root.classification)};
}

nlohmann::json to_json(const OccupationVector& v) {
  return nlohmann::json(std::vector<int>(v.counts().begin(), v.counts().end()));
}

nlohmann::json to_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

nlohmann::json to_json(const Classification& c) {
  nlohmann::json j;
  j["kind"] = to_string(c.kind);
  if (c.sigma) {
    j["sigma"] = c.sigma->to_string();
    j["side"] = c.side;
    j["lambda"] = nlohmann::json::array();
    for (const auto& l : c.lambda) j["lambda"].push_back(to_json(l));
  }
  return j;
}

nlohmann::json to_json(const LawRoot& root) {
  return {{"tau", root.tau},
          {"theta", root.theta},
          {"multiplicity", root.multiplicity},
          {"amplitude", root.amplitude},
          {"classification", to_json(root.classification)}};
}

nlohmann::json to_json(const SuppressionLaw& law) {
  nlohmann::json j;
  j["device"] = {{"family", to_string(law.device.family)}, {"phi", law.device.phi}};
  j["input"] = to_json(law.input);
  j["output"] = to_json(law.output);
  j["roots"] = nlohmann::json::array();
  for (const auto& r : law.roots) j["roots"].push_back(to_json(r));
  j["trivial_roots"] = nlohmann::json::array();
  for (const auto& r : law.trivial_roots) j["trivial_roots"].push_back(r.tau);
  j["provenance"] = {{"kind", to_string(law.provenance.kind)},
                     {"formula", law.provenance.formula},
                     {"residual", law.provenance.residual}};
  j["classification"] = to_json(law.classification);
  return j;
}

void emit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw OutputError("cannot write to stdout");
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw OutputError("cannot open '" + path + "' for writing");
  file << text;
  file.close();
  if (!file) throw OutputError("write to '" + path + "' failed");
}

}  // namespace bosonlaw::cli
