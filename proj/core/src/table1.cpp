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
#include "bosonlaw/table1.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bosonlaw/errors.hpp"
#include "bosonlaw/root_scan.hpp"

namespace bosonlaw {

namespace {

constexpr double kMatch = 1e-8;

bool is_half_pi(ThetaCase t) { return t == ThetaCase::HalfPi || t == ThetaCase::MinusHalfPi; }

std::vector<double> in_open_unit(std::vector<double> xs) {
  std::vector<double> out;
  for (double x : xs) {
    if (std::isfinite(x) && !is_trivial_tau(x)) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(), [](double a, double b) { return std::abs(a - b) < kMatch; }),
            out.end());
  return out;
}

bool same_roots(const std::vector<double>& a, const std::vector<RootEstimate>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i].x) > kMatch) return false;
  }
  return true;
}

// (2m-1)/(3m-1) +- sqrt(12(4m-1))/(6(3m-1)) versus the whole-fraction reading
// (2m-1)/(3m-1) +- sqrt(12(4m-1)/(6(3m-1))). The numeric roots decide.
void resolve_ambiguous(Table1Entry& e, const std::vector<RootEstimate>& numeric) {
  const double m = e.size;
  const double centre = (2 * m - 1) / (3 * m - 1);
  const double numerator_only = std::sqrt(12 * (4 * m - 1)) / (6 * (3 * m - 1));
  const double whole = std::sqrt(12 * (4 * m - 1) / (6 * (3 * m - 1)));
  const auto a = in_open_unit({centre - numerator_only, centre + numerator_only});
  const auto b = in_open_unit({centre - whole, centre + whole});
  const bool a_ok = same_roots(a, numeric);
  const bool b_ok = same_roots(b, numeric);
  if (a_ok && !b_ok) {
    e.resolution = "root over numerator: (2m-1)/(3m-1) +- sqrt(12(4m-1))/(6(3m-1))";
    e.roots = a;
  } else if (b_ok && !a_ok) {
    e.resolution = "root over fraction: (2m-1)/(3m-1) +- sqrt(12(4m-1)/(6(3m-1)))";
    e.roots = b;
  } else if (a_ok) {
    e.resolution = "both readings agree for this m";
    e.roots = a;
  } else {
    e.resolution = "neither reading matches; numeric roots served";
    e.numeric = true;
    for (const auto& r : numeric) e.roots.push_back(r.x);
  }
}

void restrict_size(bool ok, std::string_view restriction) {
  if (!ok) throw DomainError("table entry valid only for " + std::string(restriction));
}

}  // namespace

std::string_view to_string(Table1Row row) {
  switch (row) {
    case Table1Row::N10_II: return "<n1,1,0|m,m,m>";
    case Table1Row::N11_I: return "<n1,1,1|n1,1,1>";
    case Table1Row::N20_I: return "<n1,2,0|n1,1,1>";
    case Table1Row::N11_II: return "<n1,1,1|m,m,m>";
    case Table1Row::N20_II: return "<n1,2,0|m,m,m>";
  }
  return "?";
}

std::string_view to_string(ThetaCase theta) {
  switch (theta) {
    case ThetaCase::Zero: return "0";
    case ThetaCase::Pi: return "pi";
    case ThetaCase::HalfPi: return "pi/2";
    case ThetaCase::MinusHalfPi: return "-pi/2";
  }
  return "?";
}

double theta_value(ThetaCase theta) {
  switch (theta) {
    case ThetaCase::Zero: return 0.0;
    case ThetaCase::Pi: return kPi;
    case ThetaCase::HalfPi: return kPi / 2;
    case ThetaCase::MinusHalfPi: return -kPi / 2;
  }
  return 0.0;
}

InputFamily row_input(Table1Row row) {
  return row == Table1Row::N11_I || row == Table1Row::N20_I ? InputFamily::I : InputFamily::II;
}

OutputFamily row_output(Table1Row row) {
  switch (row) {
    case Table1Row::N10_II: return OutputFamily::N10;
    case Table1Row::N11_I:
    case Table1Row::N11_II: return OutputFamily::N11;
    case Table1Row::N20_I:
    case Table1Row::N20_II: return OutputFamily::N20;
  }
  return OutputFamily::N10;
}

std::vector<RootEstimate> numeric_tritter_roots(TritterFamily family, InputFamily input,
                                                OutputFamily output, double theta, int size,
                                                int steps) {
  const ComplexFunction f = [&](double tau) {
    return tritter_suppression_value(family, input, output, tau, theta, size);
  };
  double scale = 0.0;
  for (int i = 0; i <= 64; ++i) scale = std::max(scale, std::abs(f(i / 64.0)));
  return drop_trivial(complex_roots(f, 0.0, 1.0, steps, 1e-10 * std::max(scale, 1.0)));
}

Table1Entry table1_entry(Table1Row row, TritterFamily family, ThetaCase theta, int size) {
  if (size < 1) throw DomainError("size parameter must be at least 1");
  Table1Entry e{row, family, theta, size, {}, false, {}, {}, {}};
  const double s = size;
  const bool t1 = family == TritterFamily::T1;
  const bool half = is_half_pi(theta);
  const InputFamily input = row_input(row);
  const OutputFamily output = row_output(row);
  const double th = theta_value(theta);
  std::vector<double> closed;

  auto defer = [&](std::string_view label) {
    e.expression = std::string(label);
    e.numeric = true;
    for (const auto& r : numeric_tritter_roots(family, input, output, th, size)) closed.push_back(r.x);
  };

  switch (row) {
    case Table1Row::N10_II:
      e.expression = t1 ? "1/2" : "2/3";
      closed = {t1 ? 0.5 : 2.0 / 3.0};
      break;
    case Table1Row::N11_I:
      if (t1 && !half) {
        e.expression = "3n1(n1-1)/(2(n1+1)(n1+2))";
        closed = {3 * s * (s - 1) / (2 * (s + 1) * (s + 2))};
      } else if (t1) {
        restrict_size(size != 1, "n1 != 1 (for n1 = 1 the amplitude vanishes for every tau)");
        e.expression = "3n1/(4(n1+1))";
        closed = {3 * s / (4 * (s + 1))};
      } else if (!half) {
        e.expression = "2n1(n1-1)/((n1+1)(n1+2))";
        closed = {2 * s * (s - 1) / ((s + 1) * (s + 2))};
      } else {
        e.expression = "4n1/((n1+1)(n1+2))";
        closed = {4 * s / ((s + 1) * (s + 2))};
      }
      break;
    case Table1Row::N20_I:
      if (!half) {
        restrict_size(size == 1 || size == 2, "n1 in {1, 2}");
        e.expression = t1 ? "1/2" : "2/3";
        closed = {t1 ? 0.5 : 2.0 / 3.0};
      } else {
        defer(t1 ? "zeros of f(n1,2,0|n1,1,1; T1)" : "zeros of f(n1,2,0|n1,1,1; T2)");
      }
      break;
    case Table1Row::N11_II:
      if (t1 && !half) {
        e.expression = "(1 +- 1/sqrt(m))/2";
        closed = {0.5 * (1 - 1 / std::sqrt(s)), 0.5 * (1 + 1 / std::sqrt(s))};
      } else if (t1) {
        e.expression = "1/2";
        closed = {0.5};
      } else if (!half) {
        e.expression = "(2m-1)/(3m-1) +- sqrt(12(4m-1))/(6(3m-1))";
      } else {
        e.expression = "2/3, 2m/(3m-1)";
        closed = {2.0 / 3.0, 2 * s / (3 * s - 1)};
      }
      break;
    case Table1Row::N20_II:
      if (t1 && !half) {
        e.expression = "1/2";
        closed = {0.5};
      } else if (t1) {
        defer("zeros of f(n1,2,0|m,m,m; T1)");
      } else if (!half) {
        e.expression = "2/3, 2m/(3m-1)";
        closed = {2.0 / 3.0, 2 * s / (3 * s - 1)};
      } else {
        e.expression = "(2m-1)/(3m-1) +- sqrt(12(4m-1))/(6(3m-1))";
      }
      break;
  }

  const bool ambiguous = !t1 && ((row == Table1Row::N11_II && !half) || (row == Table1Row::N20_II && half));
  if (ambiguous) {
    resolve_ambiguous(e, numeric_tritter_roots(family, input, output, th, size));
  } else {
    e.roots = in_open_unit(closed);
  }

  std::vector<LawRoot> candidates;
  for (double tau : e.roots) {
    // A root where the suppression function has vanishing slope is a double root.
    const double h = 1e-6;
    const double slope =
        std::abs(tritter_suppression_value(family, input, output, std::min(tau + h, 1.0), th, size) -
                 tritter_suppression_value(family, input, output, std::max(tau - h, 0.0), th, size)) /
        (2 * h);
    candidates.push_back(root_at(tau, th, slope < 1e-6 ? 2 : 1));
  }
  const DeviceSpec device{t1 ? DeviceFamily::T1 : DeviceFamily::T2, 0.0};
  Provenance prov;
  if (e.numeric) {
    prov.kind = Provenance::Kind::NumericRoot;
    for (double tau : e.roots) {
      prov.residual = std::max(prov.residual,
                               std::abs(tritter_suppression_value(family, input, output, tau, th, size)));
    }
  } else {
    prov.kind = Provenance::Kind::ClosedForm;
  }
  prov.formula = e.expression;
  e.law = make_law(device, family_input(input, size), family_output(input, output, size), candidates,
                   std::move(prov));
  return e;
}

std::vector<double> table1_roots(Table1Row row, TritterFamily family, ThetaCase theta, int size) {
  return table1_entry(row, family, theta, size).roots;
}

}  // namespace bosonlaw
