// Copyright 2026 The shadescope Authors
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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "model/capabilities.hpp"
#include "model/hash.hpp"
#include "model/shade.hpp"

namespace shadescope::classify {

enum class EvidenceSource { LocalNetDb, ConsoleCache, FloodfillProbe };

std::string_view to_string(EvidenceSource source) noexcept;

/// One checkpoint of a classification run. For probe checkpoints
/// `probes_used` is cumulative.
struct Evidence {
  EvidenceSource source = EvidenceSource::LocalNetDb;
  bool hit = false;
  std::size_t probes_used = 0;
  std::size_t failed_probes = 0;  // cumulative

  friend bool operator==(const Evidence&, const Evidence&) = default;
};

enum class ProbeOutcome { Answered, Failed };

struct ProbeLogEntry {
  std::size_t index = 0;
  RouterHash floodfill;
  ProbeOutcome outcome = ProbeOutcome::Answered;
};

enum class Outcome {
  Classified,
  /// Probe transport failed; no shade can be asserted.
  Inconclusive,
};

struct ShadeReport {
  RouterHash subject;
  Outcome outcome = Outcome::Classified;
  std::optional<Shade> shade;  // empty iff inconclusive
  std::vector<Evidence> evidence;
  std::optional<CapabilityProfile> profile;  // present iff a record was retrieved
  std::optional<std::string> caps;
  std::vector<ProbeLogEntry> probe_log;
  std::vector<std::string> diagnostics;

  std::size_t probes_used() const noexcept;
  std::size_t failed_probes() const noexcept;
  bool any_hit() const noexcept;
};

nlohmann::json report_to_json(const ShadeReport& report);

/// "probe_index,floodfill_b64,result" with a header line.
std::string probe_log_csv(const ShadeReport& report);

/// Human-readable verdict block, e.g. "Shade 8: Exclusive (Layer 2)".
std::string report_to_text(const ShadeReport& report);

}  // namespace shadescope::classify
