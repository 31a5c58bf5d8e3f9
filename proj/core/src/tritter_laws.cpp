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
#include "bosonlaw/tritter_laws.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bosonlaw/errors.hpp"

namespace bosonlaw {

namespace {

constexpr Complex kI(0.0, 1.0);

Complex t1_input_two(OutputFamily output, double tau, double theta, double m) {
  const Complex e1 = std::exp(kI * theta);
  const Complex e2 = std::exp(2.0 * kI * theta);
  switch (output) {
    case OutputFamily::N10: return m / 3.0 * (2.0 * tau - 1.0);
    case OutputFamily::N01: return -m / 3.0 * (2.0 * tau - 1.0);
    case OutputFamily::N11:
      return m / 9.0 * (2.0 * (2.0 * m + e2 - 1.0) * (tau - 1.0) * tau + m - 1.0);
    case OutputFamily::N20:
      return m / 9.0 * ((4.0 * m - 2.0 - 2.0 * e2) * (1.0 - tau) * tau - m + 1.0) +
             2.0 * m / 27.0 * kI * e1 * (2.0 * tau - 1.0) * std::sqrt(3.0 * tau * (1.0 - tau));
  }
  return {};
}

Complex t2_input_two(OutputFamily output, double tau, double theta, double m) {
  const Complex e1 = std::exp(kI * theta);
  const Complex e2 = std::exp(2.0 * kI * theta);
  switch (output) {
    case OutputFamily::N10:
    case OutputFamily::N01:
      return m * std::sqrt(2.0) / 4.0 * (3.0 * tau - 2.0) * std::sqrt(tau) * e1;
    case OutputFamily::N11:
      return m / 8.0 *
             (3.0 * (3.0 * m - 1.0) * e2 * tau * tau - 2.0 * ((6.0 * m - 2.0) * e2 - 1.0) * tau +
              (4.0 * m - 2.0) * e2 - 2.0) *
             tau;
    case OutputFamily::N20:
      return m / 8.0 *
             ((9.0 * m - 3.0) * e2 * tau * tau - 2.0 * ((6.0 * m - 2.0) * e2 + 1.0) * tau +
              2.0 * ((2.0 * m - 1.0) * e2 + 1.0)) *
             tau;
  }
  return {};
}

Complex t2_input_one(OutputFamily output, double tau, double theta, double n1) {
  const Complex e1 = std::exp(kI * theta);
  const Complex e2 = std::exp(2.0 * kI * theta);
  const double root = std::sqrt(tau * (1.0 - tau));
  if (output == OutputFamily::N11) {
    return std::sqrt(2.0) / 4.0 *
           (e2 * (2.0 + 3.0 * n1 + n1 * n1) * tau + (3.0 - e2) * n1 - (1.0 + e2) * n1 * n1) * root;
  }
  return std::sqrt(2.0) / 4.0 *
             ((2.0 + 3.0 * n1 + n1 * n1) * e2 * tau - (3.0 + e2 + (e2 - 1.0) * n1) * n1) * root +
         1.0 / std::sqrt(2.0) * kI * e1 * (1.0 - n1) * (n1 - (1.0 + n1) * tau) * std::sqrt(tau);
}

}  // namespace

std::string_view to_string(InputFamily family) { return family == InputFamily::I ? "I" : "II"; }

std::string_view to_string(OutputFamily family) {
  switch (family) {
    case OutputFamily::N10: return "N10";
    case OutputFamily::N01: return "N01";
    case OutputFamily::N11: return "N11";
    case OutputFamily::N20: return "N20";
  }
  return "?";
}

InputFamily parse_input_family(std::string_view text) {
  if (text == "I" || text == "i" || text == "1") return InputFamily::I;
  if (text == "II" || text == "ii" || text == "2") return InputFamily::II;
  throw ContractError("input family must be I or II, got '" + std::string(text) + "'");
}

OutputFamily parse_output_family(std::string_view text) {
  if (text == "N10" || text == "n10") return OutputFamily::N10;
  if (text == "N01" || text == "n01") return OutputFamily::N01;
  if (text == "N11" || text == "n11") return OutputFamily::N11;
  if (text == "N20" || text == "n20") return OutputFamily::N20;
  throw ContractError("output family must be N10, N01, N11 or N20, got '" + std::string(text) + "'");
}

OccupationVector family_input(InputFamily input, int size) {
  if (size < 1) throw ContractError("size parameter must be at least 1");
  return input == InputFamily::I ? OccupationVector{size, 1, 1} : OccupationVector{size, size, size};
}

OccupationVector family_output(InputFamily input, OutputFamily output, int size) {
  const int n = family_input(input, size).total();
  switch (output) {
    case OutputFamily::N10: return {n - 1, 1, 0};
    case OutputFamily::N01: return {n - 1, 0, 1};
    case OutputFamily::N11: return {n - 2, 1, 1};
    case OutputFamily::N20: return {n - 2, 2, 0};
  }
  return {};
}

Complex general_suppression_value(const ComplexMatrix& u, const OccupationVector& m,
                                  OutputFamily output) {
  if (u.rows() != 3 || u.cols() != 3 || m.modes() != 3) {
    throw ContractError("general_suppression_value needs a 3-mode device");
  }
  auto U = [&u](int k, int l) { return u(k - 1, l - 1); };
  const double m1 = m[0], m2 = m[1], m3 = m[2];
  switch (output) {
    case OutputFamily::N10:
      return m1 * U(1, 2) * U(2, 1) * U(3, 1) + m2 * U(1, 1) * U(2, 2) * U(3, 1) +
             m3 * U(1, 1) * U(2, 1) * U(3, 2);
    case OutputFamily::N01:
      return m1 * U(1, 3) * U(2, 1) * U(3, 1) + m2 * U(1, 1) * U(2, 3) * U(3, 1) +
             m3 * U(1, 1) * U(2, 1) * U(3, 3);
    case OutputFamily::N11:
      return U(1, 1) * U(2, 1) * U(3, 1) *
                 (m1 * m2 * (U(1, 2) * U(2, 3) + U(2, 2) * U(1, 3)) * U(3, 1) +
                  m1 * m3 * (U(1, 2) * U(3, 3) + U(3, 2) * U(1, 3)) * U(2, 1) +
                  m2 * m3 * (U(2, 2) * U(3, 3) + U(3, 2) * U(2, 3)) * U(1, 1)) +
             m1 * (m1 - 1) * U(1, 2) * U(1, 3) * U(2, 1) * U(2, 1) * U(3, 1) * U(3, 1) +
             m2 * (m2 - 1) * U(2, 2) * U(2, 3) * U(1, 1) * U(1, 1) * U(3, 1) * U(3, 1) +
             m3 * (m3 - 1) * U(3, 2) * U(3, 3) * U(1, 1) * U(1, 1) * U(2, 1) * U(2, 1);
    case OutputFamily::N20:
      return 2.0 * U(1, 1) * U(2, 1) * U(3, 1) *
                 (m1 * m2 * U(1, 2) * U(2, 2) * U(3, 1) + m1 * m3 * U(1, 2) * U(3, 2) * U(2, 1) +
                  m2 * m3 * U(2, 2) * U(3, 2) * U(1, 1)) +
             m1 * (m1 - 1) * U(1, 2) * U(1, 2) * U(2, 1) * U(2, 1) * U(3, 1) * U(3, 1) +
             m2 * (m2 - 1) * U(2, 2) * U(2, 2) * U(1, 1) * U(1, 1) * U(3, 1) * U(3, 1) +
             m3 * (m3 - 1) * U(3, 2) * U(3, 2) * U(1, 1) * U(1, 1) * U(2, 1) * U(2, 1);
  }
  return {};
}

Complex tritter_suppression_value(TritterFamily family, InputFamily input, OutputFamily output,
                                  double tau, double theta, int size) {
  if (size < 1) throw ContractError("size parameter must be at least 1");
  const auto s = static_cast<double>(size);
  if (input == InputFamily::II) {
    return family == TritterFamily::T1 ? t1_input_two(output, tau, theta, s)
                                       : t2_input_two(output, tau, theta, s);
  }
  if (output == OutputFamily::N10 || output == OutputFamily::N01) {
    throw NotImplementedError("no closed form for input (n1,1,1) with one secondary photon");
  }
  if (family == TritterFamily::T2) return t2_input_one(output, tau, theta, s);
  const Interferometer t = tritter({family, std::clamp(tau, 0.0, 1.0), theta});
  return general_suppression_value(t.matrix(), family_input(input, size), output);
}

Complex t1_n20_theta0(double tau, int m) {
  const double md = m;
  return md / 27.0 *
         (3.0 * (md - 1.0) * (2.0 * tau - 1.0) + 2.0 * kI * std::sqrt(3.0 * (1.0 - tau) * tau)) *
         (2.0 * tau - 1.0);
}

Complex t2_n20_theta0(double tau, int m) {
  const double md = m;
  return -md / 8.0 * ((3.0 * md - 1.0) * tau - 2.0 * md) * (3.0 * tau - 2.0) * tau;
}

}  // namespace bosonlaw
