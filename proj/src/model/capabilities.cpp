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

#include "model/capabilities.hpp"

#include <algorithm>

#include "model/errors.hpp"

namespace shadescope {

bool is_high_capacity(char bandwidth_class) noexcept {
  return bandwidth_class == 'N' || bandwidth_class == 'O' || bandwidth_class == 'P' || bandwidth_class == 'X';
}

CapsFlags parse_caps(std::string_view caps) {
  CapsFlags flags;
  int bandwidth_letters = 0;
  for (char c : caps) {
    switch (c) {
      case 'f': flags.floodfill = true; break;
      case 'H': flags.hidden = true; break;
      case 'U': flags.firewalled = true; break;
      default:
        if (const auto tier = kBandwidthClasses.find(c); tier != std::string_view::npos) {
          ++bandwidth_letters;
          if (!flags.bandwidth_class || kBandwidthClasses.find(*flags.bandwidth_class) < tier) {
            flags.bandwidth_class = c;
          }
        } else if (kCapsAlphabet.find(c) == std::string_view::npos) {
          flags.diagnostics.push_back(std::string("unknown caps character '") + c + "'");
        }
    }
  }
  if (bandwidth_letters > 1) {
    flags.diagnostics.push_back("multiple bandwidth letters in caps \"" + std::string(caps) + "\"; using " +
                                std::string(1, *flags.bandwidth_class));
  }
  return flags;
}

bool has_direct_address(const RouterInfo& record) {
  return std::any_of(record.addresses.begin(), record.addresses.end(),
                     [](const TransportAddress& a) { return a.is_direct(); });
}

bool has_introducers(const RouterInfo& record) {
  return std::any_of(record.addresses.begin(), record.addresses.end(),
                     [](const TransportAddress& a) { return a.declares_introducers(); });
}

CapabilityProfile CapabilityProfile::from_record(const RouterInfo& record) {
  const CapsFlags flags = parse_caps(record.caps().value_or(""));
  ObservedCapabilities caps;
  caps.kappa_f = flags.floodfill;
  caps.kappa_H = flags.hidden;
  caps.kappa_U = flags.firewalled;
  caps.bandwidth_class = flags.bandwidth_class;
  caps.alpha = has_direct_address(record);
  caps.iota = has_introducers(record);
  return observed(caps);
}

const ObservedCapabilities& CapabilityProfile::capabilities() const {
  if (!caps_) throw ContractViolation("capability fields are undefined for an absent record (delta = 0)");
  return *caps_;
}

}  // namespace shadescope
