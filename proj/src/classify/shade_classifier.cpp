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

#include "classify/shade_classifier.hpp"

#include "model/errors.hpp"

namespace shadescope::classify {

Shade f_cap(const CapabilityProfile& profile) {
  if (!profile.delta()) throw ContractViolation("f_cap requires a present record (delta = 1)");
  const auto& c = profile.capabilities();
  if (c.alpha) {
    if (c.kappa_f) return Shade::from_level(1);
    if (c.kappa_U) return Shade::from_level(4);
    if (c.bandwidth_class && is_high_capacity(*c.bandwidth_class)) return Shade::from_level(2);
    return Shade::from_level(3);
  }
  if (c.iota) return Shade::from_level(5);
  if (c.kappa_H) return Shade::from_level(6);
  return Shade::from_level(7);
}

Shade classify(const CapabilityProfile& profile) {
  if (!profile.delta()) return Shade::exclusive();
  return f_cap(profile);
}

std::vector<std::string> profile_diagnostics(const CapabilityProfile& profile) {
  std::vector<std::string> out;
  if (!profile.delta()) return out;
  const auto& c = profile.capabilities();
  if (c.kappa_H && c.alpha) {
    out.emplace_back("hidden flag 'H' set but a direct address is published; address takes precedence");
  }
  if (c.kappa_H && !c.alpha && c.iota) {
    out.emplace_back("hidden flag 'H' set together with introducers; classified by introducers");
  }
  return out;
}

}  // namespace shadescope::classify
