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
#include <vector>

#include "attribution/source.hpp"
#include "classify/report.hpp"

namespace shadescope::attribution {

/// Ordered floodfill list probed in batches of `batch_size`; only the first
/// `max_probes` entries are used (all of them when unset).
struct ProbePlan {
  std::vector<RouterHash> floodfills;
  std::size_t batch_size = 5;
  std::optional<std::size_t> max_probes;

  /// min(max_probes, |floodfills|)
  std::size_t probe_budget() const noexcept;
  /// Throws std::invalid_argument for batch_size == 0.
  void validate() const;
};

/// Multi-source shade classification:
///   1. local NetDB lookup; on hit classify the record (no probes)
///   2. console lookup; on hit classify the record
///   3. probe floodfills batch by batch, re-checking the console after each
///      batch; the first hit classifies the retrieved record
///   4. budget exhausted with no hit: Shade 8, unless any probe failed, in
///      which case the run is inconclusive.
/// Evidence lists local, console, then one entry per batch checkpoint.
classify::ShadeReport classify_remote(const RouterHash& target, NetDbSource& source, const ProbePlan& plan);

/// True iff the report is a Shade 8 verdict whose evidence is the full
/// conjunction: local miss, console miss, every probe checkpoint missed,
/// and no probe failed.
bool shade8_certificate(const classify::ShadeReport& report);

}  // namespace shadescope::attribution
