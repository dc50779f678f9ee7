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

#include <string>
#include <vector>

#include "model/capabilities.hpp"
#include "model/shade.hpp"

namespace shadescope::classify {

/// Capability map for routers that have a record (shades 1..7).
///
/// The table rows overlap, so the following precedence applies:
///   direct address:    floodfill -> 1, firewalled -> 4, high-cap -> 2, else 3
///   no direct address: introducers -> 5, hidden -> 6, else 7
///
/// Throws ContractViolation when the profile is absent (delta = 0).
Shade f_cap(const CapabilityProfile& profile);

/// Shade 8 when no record exists, f_cap otherwise. Total over all profiles.
Shade classify(const CapabilityProfile& profile);

/// Warnings about contradictory flag combinations in a present profile:
/// hidden flag alongside a published address, or hidden flag alongside
/// introducers on an unreachable router. Empty for absent profiles.
std::vector<std::string> profile_diagnostics(const CapabilityProfile& profile);

}  // namespace shadescope::classify
