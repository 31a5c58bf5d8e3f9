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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bosonlaw/amplitude.hpp"
#include "bosonlaw/beamsplitter_laws.hpp"
#include "bosonlaw/distinguishability.hpp"
#include "bosonlaw/errors.hpp"
#include "bosonlaw/multiport_spec.hpp"
#include "bosonlaw/multiports.hpp"
#include "bosonlaw/suppression_law.hpp"
#include "bosonlaw/symmetry.hpp"
#include "bosonlaw/table1.hpp"
#include "bosonlaw/tolerances.hpp"
#include "bosonlaw/tritter_laws.hpp"
#include "bosonlaw/zero_curves.hpp"
#include "bosonlaw/zero_report.hpp"
#include "io.hpp"

namespace bosonlaw::cli {

namespace {

using nlohmann::json;

struct Common {
  std::string output = "-";
  std::string format;
  double tol = tol::kZeroAmplitude;

  Format fmt() const { return format == "json" ? Format::Json : Format::Csv; }
};

void add_common(CLI::App* sub, Common& c, const std::string& default_format) {
  c.format = default_format;
  sub->add_option("-o,--output-file", c.output, "Output file, - for stdout")->capture_default_str();
  sub->add_option("--format", c.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--tol", c.tol, "Suppression threshold on |amplitude|")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json header_json() { return {{"schema", "bosonlaw-schema v1"}}; }

std::vector<TritterFamily> tritter_families(const std::string& text) {
  if (text == "all") return {TritterFamily::T1, TritterFamily::T2};
  if (text == "t1" || text == "T1") return {TritterFamily::T1};
  if (text == "t2" || text == "T2") return {TritterFamily::T2};
  throw ContractError("unknown tritter family '" + text + "'");
}

std::string phase_label(Complex z) {
  double turns = std::arg(z) / kPi;
  turns = std::round(turns * 1e9) / 1e9;
  if (turns <= -1.0) turns += 2.0;
  if (turns == 0.0) turns = 0.0;  // drops the sign of -0
  return number(turns);
}

// Eigenphases as multiples of pi, space separated.
std::string lambda_label(const std::vector<Complex>& lambda) {
  std::string s;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) s += ' ';
    s += phase_label(lambda[i]);
  }
  return s;
}

double verified_amplitude(const Interferometer& u, const OccupationVector& m, const OccupationVector& n,
                          double tol, const std::string& what) {
  const double a = std::abs(amp_permanent(u, m, n).value);
  if (!(a < tol)) {
    throw VerificationError(what + ": |<" + n.to_string() + "|" + m.to_string() + ">| = " + number(a));
  }
  return a;
}

// ---------------------------------------------------------------- amplitude

struct AmplitudeOptions {
  Common common;
  std::string multiport;
  std::string input;
  std::string output;
  std::string method = "all";
};

void run_amplitude(const AmplitudeOptions& o) {
  const Interferometer u = parse_multiport(o.multiport);
  const OccupationVector m = parse_occupation(o.input);
  const OccupationVector n = parse_occupation(o.output);

  std::vector<Amplitude> values;
  if (o.method == "permanent" || o.method == "all") values.push_back(amp_permanent(u, m, n));
  if (o.method == "tables" || o.method == "all") values.push_back(amp_tables(u, m, n));
  if (o.method == "recurrence" || o.method == "all") values.push_back(amp_recurrence(u, m, n));

  double spread = 0.0;
  for (const auto& a : values)
    for (const auto& b : values) spread = std::max(spread, std::abs(a.value - b.value));
  if (o.method == "all" && !(spread < o.common.tol)) {
    throw VerificationError("amplitude methods disagree by " + number(spread));
  }

  if (o.common.fmt() == Format::Json) {
    json j = header_json();
    j["multiport"] = o.multiport;
    j["input"] = to_json(m);
    j["output"] = to_json(n);
    j["amplitudes"] = json::array();
    for (const auto& a : values) {
      j["amplitudes"].push_back({{"method", to_string(a.method)},
                                 {"re", a.value.real()},
                                 {"im", a.value.imag()},
                                 {"abs", std::abs(a.value)}});
    }
    j["max_disagreement"] = spread;
    emit(o.common.output, dump(j));
    return;
  }
  std::ostringstream out;
  CsvWriter csv(out);
  out << kSchemaLine << '\n';
  csv.comment("multiport " + o.multiport + " input " + m.to_string() + " output " + n.to_string());
  csv.row({"method", "re", "im", "abs"});
  for (const auto& a : values) {
    csv.row({std::string(to_string(a.method)), number(a.value.real()), number(a.value.imag()),
             number(std::abs(a.value))});
  }
  csv.comment("max_disagreement " + number(spread));
  emit(o.common.output, out.str());
}

// ---------------------------------------------------------------- laws-bs

struct LawsBsOptions {
  Common common;
  int max_photons = 12;
  std::string secondary = "both";
  std::string order = "both";
};

void run_laws_bs(const LawsBsOptions& o) {
  if (o.max_photons < 2) throw ContractError("--max-photons must be at least 2");
  std::vector<int> secondaries;
  if (o.secondary != "2") secondaries.push_back(1);
  if (o.secondary != "1") secondaries.push_back(2);
  std::vector<OutputOrder> orders;
  if (o.order != "n2") orders.push_back(OutputOrder::N1First);
  if (o.order != "n1") orders.push_back(OutputOrder::N2First);

  std::vector<std::pair<int, SuppressionLaw>> laws;
  for (int total = 2; total <= o.max_photons; ++total) {
    for (int m1 = 1; m1 < total; ++m1) {
      const int m2 = total - m1;
      for (const int s : secondaries) {
        for (const auto order : orders) {
          SuppressionLaw law = s == 1 ? bs_law_single(m1, m2, order) : bs_law_double(m1, m2, order);
          const bool seen = std::any_of(laws.begin(), laws.end(), [&](const auto& prior) {
            return prior.second.input == law.input && prior.second.output == law.output;
          });
          if (seen) continue;
          for (auto& r : law.roots) {
            r.amplitude = verified_amplitude(device_at(law.device, r.tau, 0.0), law.input, law.output,
                                             o.common.tol, "beamsplitter law");
          }
          classify_law(law);
          laws.emplace_back(total, std::move(law));
        }
      }
    }
  }

  if (o.common.fmt() == Format::Json) {
    json j = header_json();
    j["laws"] = json::array();
    for (const auto& [total, law] : laws) j["laws"].push_back(to_json(law));
    emit(o.common.output, dump(j));
    return;
  }
  std::ostringstream out;
  CsvWriter csv(out);
  out << kSchemaLine << '\n';
  csv.row(law_columns());
  for (const auto& [total, law] : laws) {
    for (const auto& r : law.roots) {
      csv.row(law_row("BS", law.input, law.output, total, r, to_string(law.provenance.kind)));
    }
  }
  emit(o.common.output, out.str());
}

// ---------------------------------------------------------------- fig2

struct Fig2Options {
  Common common;
  std::string input;
  std::string n1;
  int steps = 2000;
};

void run_fig2(const Fig2Options& o) {
  const OccupationVector m = parse_occupation(o.input);
  if (m.modes() != 2) throw ContractError("fig2 needs a two-mode input");
  const int total = m.total();
  std::vector<int> n1s = parse_int_list(o.n1);
  for (int v : n1s)
    if (v < 0 || v > total) throw ContractError("n1 = " + std::to_string(v) + " outside [0, N]");

  struct Series {
    int n1;
    OccupationVector n;
    ZeroReport report;
  };
  std::vector<Series> series;
  for (int v : n1s) {
    OccupationVector n{v, total - v};
    ZeroReport report = bs_zero_report(m, n, o.steps);
    for (double z : report.zero_locations) {
      verified_amplitude(beamsplitter({z, 0.0}), m, n, o.common.tol, "fig2 zero");
    }
    if (report.max_bracket > tol::kBisection) {
      throw VerificationError("bisection bracket " + number(report.max_bracket) + " too wide");
    }
    series.push_back({v, std::move(n), std::move(report)});
  }
  struct Pair {
    int a, b;
    InterlaceResult result;
  };
  std::vector<Pair> pairs;
  std::vector<int> sorted = n1s;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] != sorted[i - 1] + 1) continue;
    const OccupationVector na{sorted[i - 1], total - sorted[i - 1]};
    const OccupationVector nb{sorted[i], total - sorted[i]};
    pairs.push_back({sorted[i - 1], sorted[i], check_interlacing(m, na, nb, o.steps)});
  }

  auto tau_at = [&](int i) { return static_cast<double>(i) / o.steps; };
  if (o.common.fmt() == Format::Json) {
    json j = header_json();
    j["input"] = to_json(m);
    j["steps"] = o.steps;
    j["series"] = json::array();
    for (const auto& s : series) {
      json samples = json::array();
      for (int i = 0; i <= o.steps; ++i) {
        samples.push_back({tau_at(i), bs_real_amplitude(m, s.n, tau_at(i))});
      }
      j["series"].push_back({{"n1", s.n1},
                             {"output", to_json(s.n)},
                             {"zeros", s.report.zero_locations},
                             {"count", s.report.count},
                             {"amplitude_at_0", s.report.amplitude_at_0},
                             {"amplitude_at_1", s.report.amplitude_at_1},
                             {"max_bracket", s.report.max_bracket},
                             {"samples", samples}});
    }
    j["interlacing"] = json::array();
    for (const auto& p : pairs) {
      j["interlacing"].push_back(
          {{"n1", {p.a, p.b}}, {"interlaced", p.result.interlaced}, {"witness", p.result.witness}});
    }
    emit(o.common.output, dump(j));
    return;
  }
  std::ostringstream out;
  CsvWriter csv(out);
  out << kSchemaLine << '\n';
  csv.comment("input " + m.to_string() + ", phi = 0");
  csv.row({"record", "n1", "tau", "amplitude"});
  for (const auto& s : series) {
    for (int i = 0; i <= o.steps; ++i) {
      csv.row({"sample", std::to_string(s.n1), number(tau_at(i)), number(bs_real_amplitude(m, s.n, tau_at(i)))});
    }
    for (double z : s.report.zero_locations) {
      csv.row({"zero", std::to_string(s.n1), number(z), number(bs_real_amplitude(m, s.n, z))});
    }
  }
  for (const auto& s : series) {
    csv.comment("count n1=" + std::to_string(s.n1) + " " + std::to_string(s.report.count));
  }
  for (const auto& p : pairs) {
    csv.comment("interlaced n1=" + std::to_string(p.a) + "," + std::to_string(p.b) + " " +
                (p.result.interlaced ? "yes" : "no"));
  }
  emit(o.common.output, out.str());
}

// ---------------------------------------------------------------- fig3

struct Fig3Options {
  Common common;
  std::string family = "all";
  std::string input = "all";
  std::string output = "all";
  int size = 2;
  int tau_steps = 128;
  int theta_steps = 128;
  int threads = 0;
};

void run_fig3(const Fig3Options& o) {
  std::vector<InputFamily> inputs;
  if (o.input == "all") {
    inputs = {InputFamily::I, InputFamily::II};
  } else {
    inputs = {parse_input_family(o.input)};
  }
  std::vector<OutputFamily> outputs;
  if (o.output == "all") {
    outputs = {OutputFamily::N11, OutputFamily::N20};
  } else {
    outputs = {parse_output_family(o.output)};
  }
  const ScanGrid grid{o.tau_steps, o.theta_steps};
  const double tol = std::max(o.common.tol, tol::kCurveResidual);

  struct Entry {
    ZeroCurve curve;
    std::vector<double> amplitude;
    std::vector<Classification> classification;
  };
  std::vector<Entry> entries;
  for (const auto family : tritter_families(o.family)) {
    for (const auto in : inputs) {
      for (const auto out : outputs) {
        const OccupationVector m = family_input(in, o.size);
        const OccupationVector n = family_output(in, out, o.size);
        for (auto& curve : scan_zero_curves(family, in, out, o.size, grid, o.threads)) {
          Entry e{std::move(curve), {}, {}};
          for (const auto& p : e.curve.points) {
            const Interferometer u = tritter({family, p.tau, p.theta});
            e.amplitude.push_back(verified_amplitude(u, m, n, tol, "fig3 point"));
            e.classification.push_back(classify_configuration(u, m, n));
          }
          entries.push_back(std::move(e));
        }
      }
    }
  }

  if (o.common.fmt() == Format::Json) {
    json j = header_json();
    j["grid"] = {{"tau_steps", grid.tau_steps}, {"theta_steps", grid.theta_steps}};
    j["curves"] = json::array();
    for (const auto& e : entries) {
      json points = json::array();
      for (std::size_t i = 0; i < e.curve.points.size(); ++i) {
        const auto& p = e.curve.points[i];
        points.push_back({{"tau", p.tau},
                          {"theta", p.theta},
                          {"residual", p.residual},
                          {"amplitude", e.amplitude[i]},
                          {"classification", to_json(e.classification[i])}});
      }
      j["curves"].push_back({{"family", to_string(e.curve.family)},
                             {"input", to_string(e.curve.input)},
                             {"output", to_string(e.curve.output)},
                             {"size", e.curve.size},
                             {"points", points}});
    }
    emit(o.common.output, dump(j));
    return;
  }
  std::ostringstream out;
  CsvWriter csv(out);
  out << kSchemaLine << '\n';
  auto columns = law_columns();
  columns.push_back("curve");
  csv.row(columns);
  int index = 0;
  for (const auto& e : entries) {
    const OccupationVector m = family_input(e.curve.input, e.curve.size);
    const OccupationVector n = family_output(e.curve.input, e.curve.output, e.curve.size);
    for (std::size_t i = 0; i < e.curve.points.size(); ++i) {
      LawRoot r = root_at(e.curve.points[i].tau, e.curve.points[i].theta);
      r.amplitude = e.amplitude[i];
      r.classification = e.classification[i];
      auto row = law_row(to_string(e.curve.family), m, n, e.curve.size, r,
                         to_string(Provenance::Kind::NumericRoot));
      row[6] = number(e.curve.points[i].residual);
      row.push_back(std::to_string(index));
      csv.row(row);
    }
    ++index;
  }
  emit(o.common.output, out.str());
}

// ---------------------------------------------------------------- table1

struct Table1Options {
  Common common;
  int max = 6;
  std::string family = "all";
};

void run_table1(const Table1Options& o) {
  if (o.max < 1) throw ContractError("--max must be at least 1");
  std::vector<Table1Entry> entries;
  json excluded = json::array();
  for (const auto row : kTable1Rows) {
    for (const auto family : tritter_families(o.family)) {
      for (const auto theta : kThetaCases) {
        for (int size = 1; size <= o.max; ++size) {
          try {
            Table1Entry e = table1_entry(row, family, theta, size);
            for (auto& r : e.law.roots) {
              r.amplitude = verified_amplitude(device_at(e.law.device, r.tau, r.theta), e.law.input,
                                               e.law.output, o.common.tol, "table1 root");
            }
            classify_law(e.law);
            entries.push_back(std::move(e));
          } catch (const DomainError& err) {
            excluded.push_back({{"row", to_string(row)},
                                {"family", to_string(family)},
                                {"theta", to_string(theta)},
                                {"size", size},
                                {"reason", err.what()}});
          }
        }
      }
    }
  }

  if (o.common.fmt() == Format::Json) {
    json j = header_json();
    j["entries"] = json::array();
    for (const auto& e : entries) {
      json roots = json::array();
      for (const auto& r : e.law.roots) {
        json jr = to_json(r);
        jr["verified"] = true;
        roots.push_back(jr);
      }
      j["entries"].push_back({{"row", to_string(e.row)},
                              {"family", to_string(e.family)},
                              {"theta", to_string(e.theta)},
                              {"size", e.size},
                              {"input", to_json(e.law.input)},
                              {"output", to_json(e.law.output)},
                              {"expression", e.expression},
                              {"numeric", e.numeric},
                              {"resolution", e.resolution},
                              {"roots", roots},
                              {"provenance", to_string(e.law.provenance.kind)},
                              {"classification", to_json(e.law.classification)}});
    }
    j["excluded"] = excluded;
    emit(o.common.output, dump(j));
    return;
  }
  std::ostringstream out;
  CsvWriter csv(out);
  out << kSchemaLine << '\n';
  auto columns = law_columns();
  columns.insert(columns.end(), {"row", "theta_case", "resolution"});
  csv.row(columns);
  for (const auto& e : entries) {
    for (const auto& r : e.law.roots) {
      auto row = law_row(to_string(e.family), e.law.input, e.law.output, e.size, r,
                         to_string(e.law.provenance.kind));
      row.insert(row.end(), {std::string(to_string(e.row)), std::string(to_string(e.theta)), e.resolution});
      csv.row(row);
    }
  }
  for (const auto& x : excluded) {
    csv.comment("excluded " + x["family"].get<std::string>() + " " + x["row"].get<std::string>() + " theta " +
                x["theta"].get<std::string>() + " size " + std::to_string(x["size"].get<int>()) + ": " +
                x["reason"].get<std::string>());
  }
  emit(o.common.output, out.str());
}

// ---------------------------------------------------------------- tableB

struct TableBOptions {
  Common common;
  int max = 5;
  double theta = 0.7;
};

struct Claim {
  InputFamily input;
  OutputFamily output;
  bool odd_only;  // claimed for odd n1 only
};

struct TableBRow {
  std::string sigma;
  std::string device;
  Interferometer u;
  SymmetrySide side;
  std::vector<Complex> lambda;
  std::vector<Claim> claims;
};

std::vector<TableBRow> table_b_rows(double theta) {
  const Complex w = std::polar(1.0, 2.0 * kPi / 3.0);
  const Complex one(1.0, 0.0), minus(-1.0, 0.0);
  const auto t1 = [](double tau, double th) { return tritter({TritterFamily::T1, tau, th}); };
  const auto t2 = [](double tau, double th) { return tritter({TritterFamily::T2, tau, th}); };
  using I = InputFamily;
  using O = OutputFamily;
  return {
      {"(12)", "T2(1,theta)", t2(1.0, theta), SymmetrySide::Input, {minus, one, one},
       {{I::II, O::N11, true}, {I::II, O::N20, true}}},
      {"(12)", "T2(0,0)", t2(0.0, 0.0), SymmetrySide::Input, {one, minus, one}, {{I::II, O::N11, false}}},
      {"(12)", "T2(0,pi)", t2(0.0, kPi), SymmetrySide::Input, {one, one, minus}, {{I::II, O::N11, false}}},
      {"(123)", "Ts", fourier_tritter(), SymmetrySide::Input, {one, w, w * w}, {{I::II, O::N20, false}}},
      {"(321)", "Ts", fourier_tritter(), SymmetrySide::Input, {one, w * w, w}, {{I::II, O::N20, false}}},
      {"(23)", "T1(1,theta)", t1(1.0, theta), SymmetrySide::Output, {one, minus, one},
       {{I::I, O::N11, false}, {I::II, O::N11, false}}},
      {"(23)", "T1(0,theta)", t1(0.0, theta), SymmetrySide::Output, {minus, one, one},
       {{I::I, O::N11, true}, {I::II, O::N11, true}}},
      {"(23)", "T2(1,theta)", t2(1.0, theta), SymmetrySide::Output, {one, one, minus},
       {{I::I, O::N11, false}, {I::II, O::N11, false}}},
  };
}

void run_table_b(const TableBOptions& o) {
  if (o.max < 1) throw ContractError("--max must be at least 1");
  json j = header_json();
  j["theta"] = o.theta;
  j["rows"] = json::array();
  std::ostringstream out;
  CsvWriter csv(out);
  out << kSchemaLine << '\n';
  csv.comment("theta " + number(o.theta) + "; eigenphases in units of pi");
  csv.row({"sigma", "device", "side", "lambda", "lambda_fitted", "residual", "input", "output", "tabulated",
           "predicted", "amplitude"});

  for (const auto& row : table_b_rows(o.theta)) {
    const Permutation sigma = Permutation::from_cycles(row.sigma, 3);
    const auto pair = factor_with_eigenphases(row.u, sigma, row.side, row.lambda);
    if (!pair) throw VerificationError("no factorization of " + row.device + " under " + row.sigma);
    const auto fitted = solve_phase_factorization(row.u, sigma, row.side);
    const std::string fitted_label = fitted ? lambda_label(fitted->lambda) : "none";
    json checks = json::array();
    for (const auto& claim : row.claims) {
      for (int size = 1; size <= o.max; ++size) {
        const OccupationVector m = family_input(claim.input, size);
        const OccupationVector n = family_output(claim.input, claim.output, size);
        const OccupationVector& fixed = row.side == SymmetrySide::Input ? m : n;
        if (sigma.apply(fixed) != fixed) continue;
        const bool tabulated = !claim.odd_only || n[0] % 2 == 1;
        const bool predicted = predict_suppressed(*pair, row.side == SymmetrySide::Input ? n : m);
        const double amplitude = std::abs(amp_permanent(row.u, m, n).value);
        if (predicted && !(amplitude < o.common.tol)) {
          throw VerificationError(row.device + " " + row.sigma + " predicts <" + n.to_string() + "|" +
                                  m.to_string() + "> = 0 but |amplitude| = " + number(amplitude));
        }
        checks.push_back({{"input", to_json(m)},
                          {"output", to_json(n)},
                          {"tabulated", tabulated},
                          {"predicted", predicted},
                          {"amplitude", amplitude}});
        csv.row({row.sigma, row.device, std::string(to_string(row.side)), lambda_label(row.lambda), fitted_label,
                 number(pair->residual), m.to_string(), n.to_string(), tabulated ? "yes" : "no",
                 predicted ? "yes" : "no", number(amplitude)});
      }
    }
    json lam = json::array();
    for (const auto& l : row.lambda) lam.push_back(to_json(l));
    j["rows"].push_back({{"sigma", row.sigma},
                         {"device", row.device},
                         {"side", to_string(row.side)},
                         {"lambda", lam},
                         {"lambda_fitted", fitted_label},
                         {"residual", pair->residual},
                         {"checks", checks}});
  }
  emit(o.common.output, o.common.fmt() == Format::Json ? dump(j) : out.str());
}

// ---------------------------------------------------------------- classify

struct ClassifyOptions {
  Common common;
  std::string multiport;
  std::string input;
  std::string output;
};

void run_classify(const ClassifyOptions& o) {
  const Interferometer u = parse_multiport(o.multiport);
  const OccupationVector m = parse_occupation(o.input);
  const OccupationVector n = parse_occupation(o.output);
  const double amplitude = std::abs(amp_permanent(u, m, n).value);
  const bool suppressed = amplitude < o.common.tol;
  const Classification c = classify_configuration(u, m, n);
  if (c.kind == Classification::Kind::CoveredBySymmetry && !suppressed) {
    throw VerificationError("symmetry forces a zero but |amplitude| = " + number(amplitude));
  }

  if (o.common.fmt() == Format::Json) {
    json j = header_json();
    j["multiport"] = o.multiport;
    j["input"] = to_json(m);
    j["output"] = to_json(n);
    j["amplitude"] = amplitude;
    j["suppressed"] = suppressed;
    j["classification"] = to_json(c);
    emit(o.common.output, dump(j));
    return;
  }
  std::ostringstream out;
  CsvWriter csv(out);
  out << kSchemaLine << '\n';
  csv.row({"multiport", "input", "output", "amplitude", "suppressed", "classification", "lambda"});
  csv.row({o.multiport, m.to_string(), n.to_string(), number(amplitude), suppressed ? "yes" : "no",
           classification_field(c), lambda_label(c.lambda)});
  emit(o.common.output, out.str());
}

// ---------------------------------------------------------------- distinguishability

struct DistinguishabilityOptions {
  Common common;
  std::string multiport;
  std::string input;
  std::string output;
  int port = 1;
  std::optional<double> alpha;
  std::optional<int> sweep;
};

void run_distinguishability(const DistinguishabilityOptions& o) {
  const Interferometer u = parse_multiport(o.multiport);
  const OccupationVector m = parse_occupation(o.input);
  const OccupationVector n = parse_occupation(o.output);
  if (o.port < 1 || static_cast<std::size_t>(o.port) > m.modes()) throw ContractError("--port out of range");
  const auto port = static_cast<std::size_t>(o.port - 1);
  const auto [a, b] = partial_coefficients(u, m, n, port);

  std::vector<std::pair<double, double>> points;
  std::optional<SurvivalResult> survival;
  if (o.sweep) {
    if (*o.sweep < 1) throw ContractError("--sweep needs at least one step");
    points = probability_sweep(u, m, n, port, *o.sweep);
  } else if (o.alpha) {
    points.emplace_back(*o.alpha, partial_probability(u, m, n, {port, *o.alpha}));
  } else {
    survival = law_survives(u, m, n, port);
  }

  if (o.common.fmt() == Format::Json) {
    json j = header_json();
    j["multiport"] = o.multiport;
    j["input"] = to_json(m);
    j["output"] = to_json(n);
    j["port"] = o.port;
    j["indistinguishable_term"] = a;
    j["distinguishable_term"] = b;
    if (survival) {
      j["survives"] = survival->survives;
      j["alpha"] = survival->alpha;
      j["probability"] = survival->probability;
    } else {
      j["points"] = json::array();
      for (const auto& [alpha, p] : points) j["points"].push_back({{"alpha", alpha}, {"P", p}});
    }
    emit(o.common.output, dump(j));
    return;
  }
  std::ostringstream out;
  CsvWriter csv(out);
  out << kSchemaLine << '\n';
  csv.comment("P(alpha) = " + number(a) + " cos^2(alpha) + " + number(b) + " sin^2(alpha)");
  if (survival) {
    csv.row({"port", "alpha", "P", "survives"});
    csv.row({std::to_string(o.port), number(survival->alpha), number(survival->probability),
             survival->survives ? "yes" : "no"});
  } else {
    csv.row({"alpha", "P"});
    for (const auto& [alpha, p] : points) csv.row({number(alpha), number(p)});
  }
  emit(o.common.output, out.str());
}

}  // namespace

void add_amplitude(CLI::App& app) {
  auto o = std::make_shared<AmplitudeOptions>();
  auto* sub = app.add_subcommand("amplitude", "Transition amplitude <out|in> by one or all evaluators");
  sub->add_option("--multiport", o->multiport, "bs:tau=,phi= | t1:tau=,theta= | t2:... | ts:theta= | fourier | matrix:<csv>")
      ->required();
  sub->add_option("--in", o->input, "Input occupation, e.g. 1,1 or m,m,m:m=2")->required();
  sub->add_option("--out", o->output, "Output occupation")->required();
  sub->add_option("--method", o->method, "permanent, tables, recurrence or all")
      ->check(CLI::IsMember({"permanent", "tables", "recurrence", "all"}))
      ->capture_default_str();
  add_common(sub, o->common, "csv");
  sub->footer("CSV columns: method,re,im,abs. With --method all the three values must agree within --tol.");
  sub->callback([o] { run_amplitude(*o); });
}

void add_laws_bs(CLI::App& app) {
  auto o = std::make_shared<LawsBsOptions>();
  auto* sub = app.add_subcommand("laws-bs", "Beamsplitter suppression laws for one and two secondary photons");
  sub->add_option("--max-photons", o->max_photons, "Largest m1 + m2")->capture_default_str();
  sub->add_option("--secondary", o->secondary, "1, 2 or both")
      ->check(CLI::IsMember({"1", "2", "both"}))
      ->capture_default_str();
  sub->add_option("--order", o->order, "n1 for (n1,k), n2 for (k,n2), or both")
      ->check(CLI::IsMember({"n1", "n2", "both"}))
      ->capture_default_str();
  add_common(sub, o->common, "csv");
  sub->footer("CSV columns: family,input,output,size_param,tau,theta,residual,provenance,classification");
  sub->callback([o] { run_laws_bs(*o); });
}

void add_fig2(CLI::App& app) {
  auto o = std::make_shared<Fig2Options>();
  auto* sub = app.add_subcommand("fig2", "Beamsplitter amplitude versus tau, its zeros and their interlacing");
  sub->add_option("--in", o->input, "Two-mode input, e.g. 9,4")->required();
  sub->add_option("--n1", o->n1, "Comma-separated first-mode output counts")->required();
  sub->add_option("--steps", o->steps, "Grid cells over [0, 1] (at least 1000)")->capture_default_str();
  add_common(sub, o->common, "csv");
  sub->footer(
      "CSV columns: record,n1,tau,amplitude with record = sample | zero; zero counts and interlacing follow as "
      "comment lines.");
  sub->callback([o] { run_fig2(*o); });
}

void add_fig3(CLI::App& app) {
  auto o = std::make_shared<Fig3Options>();
  auto* sub = app.add_subcommand("fig3", "Zeros of the tritter suppression functions in the (tau, theta) plane");
  sub->add_option("--family", o->family, "t1, t2 or all")->capture_default_str();
  sub->add_option("--input", o->input, "I, II or all")->capture_default_str();
  sub->add_option("--output", o->output, "N11, N20, N10, N01 or all (N11 and N20)")->capture_default_str();
  sub->add_option("--size", o->size, "n1 for input I, m for input II")->capture_default_str();
  sub->add_option("--tau-steps", o->tau_steps, "Grid cells in tau (at least 64)")->capture_default_str();
  sub->add_option("--theta-steps", o->theta_steps, "Grid cells in theta (at least 64)")->capture_default_str();
  sub->add_option("--threads", o->threads, "Worker threads; 0 uses BOSONLAW_THREADS or all cores")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_common(sub, o->common, "csv");
  sub->footer("CSV columns: family,input,output,size_param,tau,theta,residual,provenance,classification,curve");
  sub->callback([o] { run_fig3(*o); });
}

void add_table1(CLI::App& app) {
  auto o = std::make_shared<Table1Options>();
  auto* sub = app.add_subcommand("table1", "Closed-form tritter suppression laws, verified for each size");
  sub->add_option("--max", o->max, "Largest size parameter")->capture_default_str();
  sub->add_option("--family", o->family, "t1, t2 or all")->capture_default_str();
  add_common(sub, o->common, "json");
  sub->footer(
      "CSV columns: family,input,output,size_param,tau,theta,residual,provenance,classification,row,theta_case,"
      "resolution");
  sub->callback([o] { run_table1(*o); });
}

void add_table_b(CLI::App& app) {
  auto o = std::make_shared<TableBOptions>();
  auto* sub = app.add_subcommand("tableB", "Permutation-symmetry factorizations and their predicted zeros");
  sub->add_option("--max", o->max, "Largest size parameter checked")->capture_default_str();
  sub->add_option("--theta", o->theta, "Theta for the theta-independent rows")->capture_default_str();
  add_common(sub, o->common, "csv");
  sub->footer(
      "CSV columns: sigma,device,side,lambda,lambda_fitted,residual,input,output,tabulated,predicted,amplitude");
  sub->callback([o] { run_table_b(*o); });
}

void add_classify(CLI::App& app) {
  auto o = std::make_shared<ClassifyOptions>();
  auto* sub = app.add_subcommand("classify", "Whether a permutation symmetry forces <out|in> to vanish");
  sub->add_option("--multiport", o->multiport, "Multiport spec")->required();
  sub->add_option("--in", o->input, "Input occupation")->required();
  sub->add_option("--out", o->output, "Output occupation")->required();
  add_common(sub, o->common, "csv");
  sub->footer("CSV columns: multiport,input,output,amplitude,suppressed,classification,lambda");
  sub->callback([o] { run_classify(*o); });
}

void add_distinguishability(CLI::App& app) {
  auto o = std::make_shared<DistinguishabilityOptions>();
  auto* sub = app.add_subcommand("distinguishability", "Detection probability with one partially distinguishable photon");
  sub->add_option("--multiport", o->multiport, "Multiport spec")->required();
  sub->add_option("--in", o->input, "Input occupation")->required();
  sub->add_option("--out", o->output, "Output occupation")->required();
  sub->add_option("--port", o->port, "Input port of the partially distinguishable photon (1-based)")
      ->capture_default_str();
  auto* alpha = sub->add_option("--alpha", o->alpha, "Single mixing angle in [0, pi/2]");
  sub->add_option("--sweep", o->sweep, "Uniform alpha grid with this many steps")->excludes(alpha);
  add_common(sub, o->common, "csv");
  sub->footer(
      "CSV columns: alpha,P for --alpha and --sweep; port,alpha,P,survives for the survival test (the default).");
  sub->callback([o] { run_distinguishability(*o); });
}

}  // namespace bosonlaw::cli
