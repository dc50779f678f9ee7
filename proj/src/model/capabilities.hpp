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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "model/router_info.hpp"

namespace shadescope {

/// Characters that may legitimately appear in a caps string.
inline constexpr std::string_view kCapsAlphabet = "KLMNOPXfHURDEG";
/// Bandwidth letters in ascending tier order.
inline constexpr std::string_view kBandwidthClasses = "KLMNOPX";

/// N, O, P and X are high-capacity; K, L, M are low-capacity.
bool is_high_capacity(char bandwidth_class) noexcept;

struct CapsFlags {
  bool floodfill = false;   // 'f'
  bool hidden = false;      // 'H'
  bool firewalled = false;  // 'U'
  std::optional<char> bandwidth_class;
  std::vector<std::string> diagnostics;
};

/// Reads the floodfill/hidden/firewalled flags and the bandwidth letter.
/// Unknown characters are ignored and reported in `diagnostics`; if several
/// bandwidth letters are present the highest tier wins.
CapsFlags parse_caps(std::string_view caps);

/// Classifier inputs for a router whose record exists in the queried view.
struct ObservedCapabilities {
  bool kappa_f = false;
  bool kappa_H = false;
  bool kappa_U = false;
  std::optional<char> bandwidth_class;
  bool alpha = false;  // direct transport address published
  bool iota = false;   // introducer declared

  friend bool operator==(const ObservedCapabilities&, const ObservedCapabilities&) = default;
};

/// Either wraps observed capabilities (delta = 1) or is the distinguished
/// absent value (delta = 0). Observed fields of an absent profile cannot be read.
class CapabilityProfile {
 public:
  static CapabilityProfile absent() noexcept { return CapabilityProfile{}; }
  static CapabilityProfile observed(const ObservedCapabilities& caps) noexcept { return CapabilityProfile{caps}; }
  static CapabilityProfile from_record(const RouterInfo& record);

  bool delta() const noexcept { return caps_.has_value(); }
  /// Throws ContractViolation on an absent profile.
  const ObservedCapabilities& capabilities() const;

  friend bool operator==(const CapabilityProfile&, const CapabilityProfile&) = default;

 private:
  CapabilityProfile() = default;
  explicit CapabilityProfile(const ObservedCapabilities& caps) : caps_(caps) {}
  std::optional<ObservedCapabilities> caps_;
};

bool has_direct_address(const RouterInfo& record);
bool has_introducers(const RouterInfo& record);

}  // namespace shadescope
