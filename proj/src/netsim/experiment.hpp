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
#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "attribution/protocol.hpp"
#include "attribution/source.hpp"
#include "netsim/network.hpp"

namespace shadescope::netsim {

struct SimulatedSourceOptions {
  /// The prober's local NetDB already holds every published record.
  bool local_has_published = false;
  /// Probability in [0, 1] that a single probe fails in transport.
  double failure_rate = 0.0;
  std::uint64_t failure_seed = 0;
};

/// NetDbSource over a generated model. The console view starts empty and
/// grows by the stored records of every floodfill successfully probed.
class SimulatedSource final : public attribution::NetDbSource {
 public:
  explicit SimulatedSource(const NetworkModel& model, SimulatedSourceOptions options = {});

  std::optional<RouterInfo> lookup_local(const RouterHash& hash) override;
  std::optional<RouterInfo> lookup_console(const RouterHash& hash) override;
  classify::ProbeOutcome probe_floodfill(const RouterHash& floodfill) override;

  std::size_t console_size() const noexcept { return console_count_; }

 private:
  const NetworkModel& model_;
  SimulatedSourceOptions options_;
  std::vector<bool> console_known_;
  std::size_t console_count_ = 0;
  std::mt19937_64 failures_;
};

/// Probe plan over the model's floodfills, in model order or shuffled with
/// `shuffle_seed`.
attribution::ProbePlan make_probe_plan(const NetworkModel& model, std::size_t batch_size,
                                       std::optional<std::size_t> max_probes,
                                       std::optional<std::uint64_t> shuffle_seed = std::nullopt);

struct CurvePoint {
  std::size_t cumulative_probes = 0;
  std::size_t hits = 0;

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Retrieval status sampled at every batch boundary of the probe budget.
struct HitCurve {
  RouterHash target;
  std::vector<CurvePoint> points;

  std::optional<std::size_t> first_hit_probes() const;
  bool monotone() const;
  friend bool operator==(const HitCurve&, const HitCurve&) = default;
};

struct ExperimentResult {
  std::vector<HitCurve> curves;
  std::vector<classify::ShadeReport> reports;  // parallel to curves
};

/// Runs classify_remote for each target against a fresh SimulatedSource.
/// Throws std::invalid_argument if a target is not in the model or a plan
/// floodfill is not one of the model's floodfills.
ExperimentResult run_probe_experiment(const NetworkModel& model, std::span<const RouterHash> targets,
                                      const attribution::ProbePlan& plan, const SimulatedSourceOptions& options = {});

/// CSV "target,cumulative_probes,hits", rows ordered by target then probes.
std::string curves_to_csv(std::span<const HitCurve> curves);
std::vector<HitCurve> curves_from_csv(std::string_view csv);
/// Throws std::invalid_argument for empty input, IoError when
/// the file cannot be written.
void export_curves(std::span<const HitCurve> curves, const std::filesystem::path& path);
std::vector<HitCurve> import_curves(const std::filesystem::path& path);

}  // namespace shadescope::netsim
