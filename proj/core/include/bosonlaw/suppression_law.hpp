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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bosonlaw/interferometer.hpp"
#include "bosonlaw/occupation.hpp"
#include "bosonlaw/permutation.hpp"
#include "bosonlaw/types.hpp"

namespace bosonlaw {

enum class DeviceFamily { Beamsplitter, T1, T2 };

std::string_view to_string(DeviceFamily family);

/// A device family with its fixed parameters; the free transmissivity (and
/// theta for the tritters) comes from the root.
struct DeviceSpec {
  DeviceFamily family = DeviceFamily::Beamsplitter;
  double phi = 0.0;  // beamsplitter reflection phase
  int modes() const { return family == DeviceFamily::Beamsplitter ? 2 : 3; }
};

Interferometer device_at(const DeviceSpec& device, double tau, double theta);

struct Classification {
  enum class Kind { Unclassified, CoveredBySymmetry, BeyondSymmetry };
  Kind kind = Kind::Unclassified;
  std::optional<Permutation> sigma;
  std::string side;             // "input" or "output"
  std::vector<Complex> lambda;  // eigenvalue phases of the witness
};

std::string_view to_string(Classification::Kind kind);

struct LawRoot {
  double tau = 0.0;
  double theta = 0.0;
  int multiplicity = 1;
  double amplitude = 0.0;  // |<n|m>| at the root, filled by verification
  Classification classification;
};

inline LawRoot root_at(double tau, double theta = 0.0, int multiplicity = 1) {
  LawRoot r;
  r.tau = tau;
  r.theta = theta;
  r.multiplicity = multiplicity;
  return r;
}

struct Provenance {
  enum class Kind { ClosedForm, NumericRoot };
  Kind kind = Kind::ClosedForm;
  std::string formula;    // closed-form identifier
  double residual = 0.0;  // largest |f| at a numeric root
};

std::string_view to_string(Provenance::Kind kind);

struct SuppressionLaw {
  DeviceSpec device;
  OccupationVector input;
  OccupationVector output;
  std::vector<LawRoot> roots;          // in (0, 1), verified
  std::vector<LawRoot> trivial_roots;  // tau at 0 or 1, excluded
  Provenance provenance;
  Classification classification;
};

/// Splits \p candidates into trivial and nontrivial roots and checks each
/// nontrivial root with amp_permanent: |<n|m>| < \p tolerance. Throws
/// DomainError naming the offending root otherwise.
SuppressionLaw make_law(const DeviceSpec& device, OccupationVector input, OccupationVector output,
                        const std::vector<LawRoot>& candidates, Provenance provenance,
                        double tolerance);

SuppressionLaw make_law(const DeviceSpec& device, OccupationVector input, OccupationVector output,
                        const std::vector<LawRoot>& candidates, Provenance provenance);

/// Largest |<n|m>| over the nontrivial roots.
double max_root_amplitude(const SuppressionLaw& law);

}  // namespace bosonlaw
