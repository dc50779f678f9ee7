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

#include "netsim/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "model/errors.hpp"

namespace shadescope::netsim {

using classify::ProbeOutcome;

SimulatedSource::SimulatedSource(const NetworkModel& model, SimulatedSourceOptions options)
    : model_(model), options_(options), console_known_(model.routers.size(), false), failures_(options.failure_seed) {
  if (!(options_.failure_rate >= 0.0 && options_.failure_rate <= 1.0)) {
    throw std::invalid_argument("failure rate must lie in [0, 1]");
  }
}

std::optional<RouterInfo> SimulatedSource::lookup_local(const RouterHash& hash) {
  if (!options_.local_has_published) return std::nullopt;
  const auto idx = model_.find(hash);
  if (!idx) return std::nullopt;
  return model_.routers[*idx].record;
}

std::optional<RouterInfo> SimulatedSource::lookup_console(const RouterHash& hash) {
  const auto idx = model_.find(hash);
  if (!idx || !console_known_[*idx]) return std::nullopt;
  return model_.routers[*idx].record;
}

ProbeOutcome SimulatedSource::probe_floodfill(const RouterHash& floodfill) {
  if (options_.failure_rate > 0.0) {
    // 53-bit uniform in [0, 1)
    const double u = static_cast<double>(failures_() >> 11) * 0x1.0p-53;
    if (u < options_.failure_rate) return ProbeOutcome::Failed;
  }
  const auto pos = model_.floodfill_position(floodfill);
  if (!pos) return ProbeOutcome::Failed;
  for (const auto r : model_.knowledge[*pos]) {
    if (!console_known_[r]) {
      console_known_[r] = true;
      ++console_count_;
    }
  }
  return ProbeOutcome::Answered;
}

attribution::ProbePlan make_probe_plan(const NetworkModel& model, std::size_t batch_size,
                                       std::optional<std::size_t> max_probes,
                                       std::optional<std::uint64_t> shuffle_seed) {
  attribution::ProbePlan plan;
  plan.floodfills = model.floodfill_hashes();
  plan.batch_size = batch_size;
  plan.max_probes = max_probes;
  if (shuffle_seed) {
    std::mt19937_64 rng(*shuffle_seed);
    auto& v = plan.floodfills;
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(rng() % i)]);
  }
  plan.validate();
  return plan;
}

std::optional<std::size_t> HitCurve::first_hit_probes() const {
  for (const auto& p : points) {
    if (p.hits > 0) return p.cumulative_probes;
  }
  return std::nullopt;
}

bool HitCurve::monotone() const {
  return std::is_sorted(points.begin(), points.end(),
                        [](const CurvePoint& a, const CurvePoint& b) { return a.hits < b.hits; }) &&
         std::is_sorted(points.begin(), points.end(), [](const CurvePoint& a, const CurvePoint& b) {
           return a.cumulative_probes < b.cumulative_probes;
         });
}

ExperimentResult run_probe_experiment(const NetworkModel& model, std::span<const RouterHash> targets,
                                      const attribution::ProbePlan& plan, const SimulatedSourceOptions& options) {
  plan.validate();
  for (const auto& f : plan.floodfills) {
    if (!model.floodfill_position(f)) {
      throw std::invalid_argument("probe plan floodfill " + f.to_base64() + " is not a floodfill of the model");
    }
  }
  for (const auto& t : targets) {
    if (!model.find(t)) throw std::invalid_argument("target " + t.to_base64() + " is not in the model");
  }

  const std::size_t budget = plan.probe_budget();
  ExperimentResult result;
  result.curves.reserve(targets.size());
  result.reports.reserve(targets.size());
  for (const auto& target : targets) {
    SimulatedSource source(model, options);
    auto report = attribution::classify_remote(target, source, plan);

    // Probes consumed when the record was first retrieved; local/console
    // hits count as retrieved before any probe.
    std::optional<std::size_t> found_at;
    for (const auto& e : report.evidence) {
      if (e.hit) {
        found_at = e.probes_used;
        break;
      }
    }

    HitCurve curve{target, {}};
    for (std::size_t start = 0; start < budget; start += plan.batch_size) {
      const std::size_t cumulative = std::min(start + plan.batch_size, budget);
      curve.points.push_back({cumulative, found_at && *found_at <= cumulative ? 1u : 0u});
    }
    result.curves.push_back(std::move(curve));
    result.reports.push_back(std::move(report));
  }
  return result;
}

std::string curves_to_csv(std::span<const HitCurve> curves) {
  std::vector<std::pair<std::string, const HitCurve*>> ordered;
  ordered.reserve(curves.size());
  for (const auto& c : curves) ordered.emplace_back(c.target.to_base64(), &c);
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  std::string out = "target,cumulative_probes,hits\n";
  for (const auto& [name, curve] : ordered) {
    auto points = curve->points;
    std::stable_sort(points.begin(), points.end(),
                     [](const CurvePoint& a, const CurvePoint& b) { return a.cumulative_probes < b.cumulative_probes; });
    for (const auto& p : points) {
      out += name + ',' + std::to_string(p.cumulative_probes) + ',' + std::to_string(p.hits) + '\n';
    }
  }
  return out;
}

std::vector<HitCurve> curves_from_csv(std::string_view csv) {
  std::vector<HitCurve> curves;
  std::map<std::string, std::size_t> by_target;
  std::istringstream in{std::string(csv)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || (line_no == 1 && line.starts_with("target,"))) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
      throw std::invalid_argument("curve csv line " + std::to_string(line_no) + ": expected 3 fields");
    }
    const std::string target = line.substr(0, c1);
    CurvePoint p;
    const auto parse = [&](std::size_t from, std::size_t to, std::size_t& out) {
      const auto [ptr, ec] = std::from_chars(line.data() + from, line.data() + to, out);
      if (ec != std::errc{} || ptr != line.data() + to) {
        throw std::invalid_argument("curve csv line " + std::to_string(line_no) + ": bad number");
      }
    };
    parse(c1 + 1, c2, p.cumulative_probes);
    parse(c2 + 1, line.size(), p.hits);
    auto [it, inserted] = by_target.try_emplace(target, curves.size());
    if (inserted) curves.push_back(HitCurve{RouterHash::from_base64(target), {}});
    curves[it->second].points.push_back(p);
  }
  return curves;
}

void export_curves(std::span<const HitCurve> curves, const std::filesystem::path& path) {
  if (curves.empty()) throw std::invalid_argument("no curves to export");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write curve file " + path.string());
  out << curves_to_csv(curves);
  if (!out) throw IoError("cannot write curve file " + path.string());
}

std::vector<HitCurve> import_curves(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open curve file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return curves_from_csv(buf.str());
}

}  // namespace shadescope::netsim
