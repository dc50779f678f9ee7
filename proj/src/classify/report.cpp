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

#include "classify/report.hpp"

#include <algorithm>
#include <sstream>

namespace shadescope::classify {

std::string_view to_string(EvidenceSource source) noexcept {
  switch (source) {
    case EvidenceSource::LocalNetDb: return "local_netdb";
    case EvidenceSource::ConsoleCache: return "console_cache";
    case EvidenceSource::FloodfillProbe: return "floodfill_probe";
  }
  return "unknown";
}

std::size_t ShadeReport::probes_used() const noexcept {
  std::size_t n = 0;
  for (const auto& e : evidence) n = std::max(n, e.probes_used);
  return n;
}

std::size_t ShadeReport::failed_probes() const noexcept {
  std::size_t n = 0;
  for (const auto& e : evidence) n = std::max(n, e.failed_probes);
  return n;
}

bool ShadeReport::any_hit() const noexcept {
  return std::any_of(evidence.begin(), evidence.end(), [](const Evidence& e) { return e.hit; });
}

nlohmann::json report_to_json(const ShadeReport& report) {
  nlohmann::json evidence = nlohmann::json::array();
  for (const auto& e : report.evidence) {
    evidence.push_back({{"source", to_string(e.source)},
                        {"hit", e.hit},
                        {"probes_used", e.probes_used},
                        {"failed_probes", e.failed_probes}});
  }
  nlohmann::json out{
      {"subject", report.subject.to_base64()},
      {"outcome", report.outcome == Outcome::Classified ? "classified" : "inconclusive"},
      {"shade", nullptr},
      {"evidence", std::move(evidence)},
      {"caps", report.caps ? nlohmann::json(*report.caps) : nlohmann::json(nullptr)},
      {"alpha", nullptr},
      {"iota", nullptr},
      {"probes_used", report.probes_used()},
      {"failed_probes", report.failed_probes()},
      {"hits", report.any_hit() ? 1 : 0},
      {"diagnostics", report.diagnostics},
  };
  if (report.shade) {
    out["shade"] = {{"level", report.shade->level()},
                    {"name", std::string(report.shade->name())},
                    {"layer", report.shade->layer()}};
  }
  if (report.profile && report.profile->delta()) {
    out["alpha"] = report.profile->capabilities().alpha;
    out["iota"] = report.profile->capabilities().iota;
  }
  return out;
}

std::string probe_log_csv(const ShadeReport& report) {
  std::string out = "probe_index,floodfill_b64,result\n";
  for (const auto& p : report.probe_log) {
    out += std::to_string(p.index) + ',' + p.floodfill.to_base64() + ',' +
           (p.outcome == ProbeOutcome::Answered ? "answered" : "failed") + '\n';
  }
  return out;
}

std::string report_to_text(const ShadeReport& report) {
  std::ostringstream out;
  const auto stage = [&](EvidenceSource src) -> std::string {
    for (const auto& e : report.evidence) {
      if (e.source == src) return e.hit ? "HIT" : "no hit";
    }
    return "not queried";
  };
  std::size_t probe_hits = 0;
  std::size_t checkpoints = 0;
  for (const auto& e : report.evidence) {
    if (e.source != EvidenceSource::FloodfillProbe) continue;
    ++checkpoints;
    probe_hits += e.hit ? 1 : 0;
  }

  out << "Target:           " << report.subject.to_base64() << '\n';
  out << "Local NetDB:      " << stage(EvidenceSource::LocalNetDb) << '\n';
  out << "Console cache:    " << stage(EvidenceSource::ConsoleCache) << '\n';
  out << "Floodfill probes: " << report.probes_used() << " probes, " << checkpoints << " checkpoints, "
      << report.failed_probes() << " failed, " << probe_hits << " hits\n";
  if (report.caps) out << "Caps:             " << *report.caps << '\n';
  if (report.profile && report.profile->delta()) {
    const auto& c = report.profile->capabilities();
    out << "Direct address:   " << (c.alpha ? "yes" : "no") << '\n';
    out << "Introducers:      " << (c.iota ? "yes" : "no") << '\n';
  }
  for (const auto& d : report.diagnostics) out << "Note:             " << d << '\n';
  if (report.shade) {
    out << "Verdict:          Shade " << report.shade->level() << ": " << report.shade->name() << " (Layer "
        << report.shade->layer() << ")\n";
  } else {
    out << "Verdict:          inconclusive (" << report.failed_probes() << " probe(s) failed)\n";
  }
  return out.str();
}

}  // namespace shadescope::classify
