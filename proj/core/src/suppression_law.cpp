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
#include "bosonlaw/suppression_law.hpp"

#include <algorithm>
#include <sstream>

#include "bosonlaw/amplitude.hpp"
#include "bosonlaw/errors.hpp"
#include "bosonlaw/multiports.hpp"
#include "bosonlaw/root_scan.hpp"
#include "bosonlaw/tolerances.hpp"

namespace bosonlaw {

std::string_view to_string(DeviceFamily family) {
  switch (family) {
    case DeviceFamily::Beamsplitter: return "BS";
    case DeviceFamily::T1: return "T1";
    case DeviceFamily::T2: return "T2";
  }
  return "?";
}

std::string_view to_string(Provenance::Kind kind) {
  return kind == Provenance::Kind::ClosedForm ? "closed-form" : "numeric-root";
}

std::string_view to_string(Classification::Kind kind) {
  switch (kind) {
    case Classification::Kind::Unclassified: return "unclassified";
    case Classification::Kind::CoveredBySymmetry: return "covered";
    case Classification::Kind::BeyondSymmetry: return "beyond";
  }
  return "?";
}

Interferometer device_at(const DeviceSpec& device, double tau, double theta) {
  switch (device.family) {
    case DeviceFamily::Beamsplitter: return beamsplitter({tau, device.phi});
    case DeviceFamily::T1: return tritter({TritterFamily::T1, tau, theta});
    case DeviceFamily::T2: return tritter({TritterFamily::T2, tau, theta});
  }
  throw ContractError("unknown device family");
}

SuppressionLaw make_law(const DeviceSpec& device, OccupationVector input, OccupationVector output,
                        const std::vector<LawRoot>& candidates, Provenance provenance,
                        double tolerance) {
  if (input.modes() != static_cast<std::size_t>(device.modes()) || output.modes() != input.modes()) {
    throw ContractError("law configuration does not match the device");
  }
  if (input.total() != output.total()) throw ContractError("law input and output photon numbers differ");
  SuppressionLaw law{device, std::move(input), std::move(output), {}, {}, std::move(provenance), {}};
  for (LawRoot r : candidates) {
    if (is_trivial_tau(r.tau)) {
      law.trivial_roots.push_back(r);
      continue;
    }
    r.amplitude = std::abs(amp_permanent(device_at(device, r.tau, r.theta), law.input, law.output).value);
    if (!(r.amplitude < tolerance)) {
      std::ostringstream msg;
      msg << to_string(device.family) << " " << law.input.to_string() << " -> " << law.output.to_string()
          << ": root tau=" << r.tau << " theta=" << r.theta << " leaves |amplitude| = " << r.amplitude;
      throw DomainError(msg.str());
    }
    law.roots.push_back(r);
  }
  return law;
}

SuppressionLaw make_law(const DeviceSpec& device, OccupationVector input, OccupationVector output,
                        const std::vector<LawRoot>& candidates, Provenance provenance) {
  return make_law(device, std::move(input), std::move(output), candidates, std::move(provenance),
                  tol::kZeroAmplitude);
}

double max_root_amplitude(const SuppressionLaw& law) {
  double worst = 0.0;
  for (const auto& r : law.roots) worst = std::max(worst, r.amplitude);
  return worst;
}

}  // namespace bosonlaw
