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
#include "bosonlaw/multiport_spec.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "bosonlaw/errors.hpp"
#include "bosonlaw/multiports.hpp"

namespace bosonlaw {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view text) {
  text = trim(text);
  // from_chars rejects a leading '+'.
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
    throw ContractError("bad number '" + std::string(text) + "'");
  }
  return v;
}

std::map<std::string, double> parse_params(std::string_view body) {
  std::map<std::string, double> out;
  if (trim(body).empty()) return out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    if (comma == std::string_view::npos) comma = body.size();
    const std::string_view item = trim(body.substr(pos, comma - pos));
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw ContractError("expected key=value, got '" + std::string(item) + "'");
    out[std::string(trim(item.substr(0, eq)))] = parse_double(item.substr(eq + 1));
    pos = comma + 1;
  }
  return out;
}

double take(std::map<std::string, double>& params, const std::string& key, double fallback,
            bool required) {
  auto it = params.find(key);
  if (it == params.end()) {
    if (required) throw ContractError("multiport spec is missing '" + key + "'");
    return fallback;
  }
  const double v = it->second;
  params.erase(it);
  return v;
}

void reject_leftovers(const std::map<std::string, double>& params) {
  if (!params.empty()) throw ContractError("unknown multiport parameter '" + params.begin()->first + "'");
}

}  // namespace

Complex parse_complex(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ContractError("empty complex number");
  if (text.front() == '(' && text.back() == ')') {
    const std::string_view inner = text.substr(1, text.size() - 2);
    const std::size_t comma = inner.find(',');
    if (comma == std::string_view::npos) return {parse_double(inner), 0.0};
    return {parse_double(inner.substr(0, comma)), parse_double(inner.substr(comma + 1))};
  }
  const char last = text.back();
  if (last != 'j' && last != 'i') return {parse_double(text), 0.0};
  const std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not the leading one and not an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto imag_of = [](std::string_view s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_double(s);
  };
  if (split == std::string_view::npos) return {0.0, imag_of(body)};
  return {parse_double(body.substr(0, split)), imag_of(body.substr(split))};
}

ComplexMatrix parse_complex_csv(std::string_view text) {
  std::vector<std::vector<Complex>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view l = trim(line);
    if (l.empty() || l.front() == '#') continue;
    std::vector<Complex> row;
    // Commas inside "(re,im)" do not split fields.
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= l.size(); ++i) {
      if (i < l.size() && l[i] == '(') ++depth;
      if (i < l.size() && l[i] == ')') --depth;
      if (i == l.size() || (l[i] == ',' && depth == 0)) {
        row.push_back(parse_complex(l.substr(start, i - start)));
        start = i + 1;
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ContractError("matrix CSV is empty");
  const auto n = static_cast<Eigen::Index>(rows.size());
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(i)].size()) != n) {
      throw ContractError("matrix CSV must be square");
    }
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

Interferometer parse_multiport(std::string_view spec) {
  spec = trim(spec);
  const std::size_t colon = spec.find(':');
  const std::string kind(trim(spec.substr(0, colon)));
  const std::string_view body = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

  if (kind == "matrix") {
    const std::string path(trim(body));
    std::ifstream file(path);
    if (!file) throw ContractError("cannot read matrix file '" + path + "'");
    std::stringstream buf;
    buf << file.rdbuf();
    return Interferometer(parse_complex_csv(buf.str()));
  }
  auto params = parse_params(body);
  if (kind == "bs") {
    const double tau = take(params, "tau", 0.5, true);
    const double phi = take(params, "phi", 0.0, false);
    reject_leftovers(params);
    return beamsplitter({tau, phi});
  }
  if (kind == "t1" || kind == "t2") {
    const double tau = take(params, "tau", 0.5, true);
    const double theta = take(params, "theta", 0.0, false);
    reject_leftovers(params);
    return tritter({kind == "t1" ? TritterFamily::T1 : TritterFamily::T2, tau, theta});
  }
  if (kind == "ts") {
    const double theta = take(params, "theta", 0.0, false);
    reject_leftovers(params);
    return symmetric_tritter(theta);
  }
  if (kind == "fourier") {
    reject_leftovers(params);
    return fourier_tritter();
  }
  throw ContractError("unknown multiport kind '" + kind + "' (expected bs, t1, t2, ts, fourier, matrix)");
}

}  // namespace bosonlaw
