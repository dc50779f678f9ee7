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

#include "attribution/protocol.hpp"

#include <algorithm>
#include <stdexcept>

#include "classify/shade_classifier.hpp"

namespace shadescope::attribution {

using classify::Evidence;
using classify::EvidenceSource;
using classify::ProbeOutcome;
using classify::ShadeReport;

std::size_t ProbePlan::probe_budget() const noexcept {
  return std::min(max_probes.value_or(floodfills.size()), floodfills.size());
}

void ProbePlan::validate() const {
  if (batch_size == 0) throw std::invalid_argument("probe batch size must be positive");
}

namespace {

void classify_record(ShadeReport& report, const RouterInfo& record) {
  const auto profile = CapabilityProfile::from_record(record);
  report.outcome = classify::Outcome::Classified;
  report.shade = classify::f_cap(profile);
  report.profile = profile;
  report.caps = record.caps();
  const auto caps_notes = parse_caps(record.caps().value_or("")).diagnostics;
  report.diagnostics.insert(report.diagnostics.end(), caps_notes.begin(), caps_notes.end());
  const auto notes = classify::profile_diagnostics(profile);
  report.diagnostics.insert(report.diagnostics.end(), notes.begin(), notes.end());
}

}  // namespace

ShadeReport classify_remote(const RouterHash& target, NetDbSource& source, const ProbePlan& plan) {
  plan.validate();
  ShadeReport report;
  report.subject = target;

  if (const auto record = source.lookup_local(target)) {
    report.evidence.push_back({EvidenceSource::LocalNetDb, true, 0, 0});
    classify_record(report, *record);
    return report;
  }
  report.evidence.push_back({EvidenceSource::LocalNetDb, false, 0, 0});

  if (const auto record = source.lookup_console(target)) {
    report.evidence.push_back({EvidenceSource::ConsoleCache, true, 0, 0});
    classify_record(report, *record);
    return report;
  }
  report.evidence.push_back({EvidenceSource::ConsoleCache, false, 0, 0});

  const std::size_t budget = plan.probe_budget();
  std::size_t probes = 0;
  std::size_t failed = 0;
  for (std::size_t start = 0; start < budget; start += plan.batch_size) {
    const std::size_t end = std::min(start + plan.batch_size, budget);
    for (std::size_t i = start; i < end; ++i) {
      const auto& floodfill = plan.floodfills[i];
      ProbeOutcome outcome = ProbeOutcome::Failed;
      try {
        outcome = source.probe_floodfill(floodfill);
      } catch (const std::exception&) {
        outcome = ProbeOutcome::Failed;
      }
      ++probes;
      if (outcome == ProbeOutcome::Failed) ++failed;
      report.probe_log.push_back({i, floodfill, outcome});
    }
    const auto record = source.lookup_console(target);
    report.evidence.push_back({EvidenceSource::FloodfillProbe, record.has_value(), probes, failed});
    if (record) {
      classify_record(report, *record);
      return report;
    }
  }

  if (failed > 0) {
    report.outcome = classify::Outcome::Inconclusive;
    report.shade.reset();
    report.diagnostics.push_back(std::to_string(failed) + " of " + std::to_string(probes) +
                                 " floodfill probes failed; absence not established");
    return report;
  }
  report.outcome = classify::Outcome::Classified;
  report.shade = Shade::exclusive();
  return report;
}

bool shade8_certificate(const ShadeReport& report) {
  if (report.outcome != classify::Outcome::Classified || !report.shade || report.shade->level() != 8) return false;
  if (report.profile.has_value()) return false;
  bool saw_local = false;
  bool saw_console = false;
  for (const auto& e : report.evidence) {
    if (e.hit || e.failed_probes != 0) return false;
    saw_local |= e.source == EvidenceSource::LocalNetDb;
    saw_console |= e.source == EvidenceSource::ConsoleCache;
  }
  const bool all_answered = std::all_of(report.probe_log.begin(), report.probe_log.end(),
                                        [](const auto& p) { return p.outcome == ProbeOutcome::Answered; });
  return saw_local && saw_console && all_answered;
}

}  // namespace shadescope::attribution
