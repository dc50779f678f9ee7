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

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "model/capabilities.hpp"
#include "model/date.hpp"
#include "model/router_info.hpp"
#include "model/shade.hpp"

namespace shadescope::netsim {

/// Generation parameters. `shade_distribution[i]` is the fraction of
/// routers with shade i+1. Floodfills are exactly the shade-1 routers, so
/// `floodfill_fraction` must agree with the shade-1 mass.
struct NetworkSpec {
  std::size_t n_routers = 0;
  double floodfill_fraction = 0.0;
  std::array<double, 8> shade_distribution{};
  std::size_t k = 4;
  std::uint64_t seed = 1;
  UtcDate date = UtcDate::from_ymd(2025, 1, 1);
};

class InfeasibleSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// {n_routers, floodfill_fraction, shade_distribution:{"1":..,"8":..}, k, seed, date}
/// Missing shade keys count as 0. Throws InfeasibleSpec on invalid values.
NetworkSpec parse_network_spec(const nlohmann::json& j);
NetworkSpec load_network_spec(const std::filesystem::path& path);
nlohmann::json network_spec_to_json(const NetworkSpec& spec);

/// Largest-remainder apportionment of n_routers over the eight shades.
std::array<std::size_t, 8> shade_counts(const NetworkSpec& spec);

/// Throws InfeasibleSpec if the spec cannot be realised.
void validate(const NetworkSpec& spec);

struct SimRouter {
  RouterHash hash;
  Shade shade = Shade::beacon();
  CapabilityProfile profile = CapabilityProfile::absent();
  std::optional<RouterInfo> record;  // present iff published (shades 1-7)
};

struct NetworkModel {
  NetworkSpec spec;
  std::vector<SimRouter> routers;                 // V1
  std::vector<std::size_t> published;             // V1' (router indices)
  std::vector<std::size_t> exclusive;             // V2 = V1 \ V1'
  std::vector<std::size_t> floodfills;            // F (router indices)
  std::vector<std::vector<std::size_t>> knowledge;  // per floodfill position: stored router indices
  std::vector<std::vector<std::size_t>> stored_on;  // per router: floodfill positions holding it
  std::unordered_map<RouterHash, std::size_t> index;            // hash -> router index
  std::unordered_map<RouterHash, std::size_t> floodfill_index;  // hash -> floodfill position

  std::optional<std::size_t> find(const RouterHash& hash) const;
  std::optional<std::size_t> floodfill_position(const RouterHash& hash) const;
  std::vector<RouterHash> floodfill_hashes() const;
  std::vector<RouterInfo> published_records() const;
  /// Router indices with the given shade level, in model order.
  std::vector<std::size_t> routers_with_shade(int level) const;
};

/// Deterministic for a given spec. Each published record is stored on the
/// min(k, |F|) floodfills XOR-nearest to its routing key for spec.date.
NetworkModel generate_network(const NetworkSpec& spec);

struct VisibilityMetrics {
  std::size_t total = 0;      // |V1|
  std::size_t published = 0;  // |V1'|
  std::size_t exclusive = 0;  // |V2|
  double rho = 1.0;           // |V1'| / |V1|
  double xi = 0.0;            // |V2| / |V1| = 1 - rho
};

VisibilityMetrics completeness_metrics(const NetworkModel& model);

}  // namespace shadescope::netsim
