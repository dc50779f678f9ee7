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
#include <cstdint>
#include <numeric>

#include "netsim/network.hpp"

namespace testsupport {

/// Spec realising exact per-shade router counts (index 0 = shade 1).
inline shadescope::netsim::NetworkSpec spec_from_counts(const std::array<std::size_t, 8>& counts, std::uint64_t seed,
                                                        std::size_t k = 4) {
  shadescope::netsim::NetworkSpec spec;
  spec.n_routers = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
  for (std::size_t i = 0; i < 8; ++i) {
    spec.shade_distribution[i] = static_cast<double>(counts[i]) / static_cast<double>(spec.n_routers);
  }
  spec.floodfill_fraction = spec.shade_distribution[0];
  spec.k = k;
  spec.seed = seed;
  return spec;
}

/// 3,242 routers, 1,556 of them floodfills, exactly one shade-8 router.
inline shadescope::netsim::NetworkSpec snapshot_shape_spec(std::uint64_t seed) {
  return spec_from_counts({1556, 700, 400, 250, 150, 80, 105, 1}, seed);
}

}  // namespace testsupport
