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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "model/lease_set.hpp"

namespace shadescope::attribution {

/// Leading bits of a router hash. A 256-bit prefix is an exact hash.
class HashPrefix {
 public:
  static constexpr std::size_t kMinBits = 32;

  static HashPrefix exact(const RouterHash& hash);
  /// Each base64 character contributes 6 bits ('=' padding is ignored).
  /// Throws std::invalid_argument below 32 bits, EncodingError on bad chars.
  static HashPrefix from_base64(std::string_view text);
  /// Throws std::invalid_argument when bits < 32 or bits > 256.
  static HashPrefix from_bits(const RouterHash& bytes, std::size_t bits);

  bool is_exact() const noexcept { return bits_ == 256; }
  std::size_t bits() const noexcept { return bits_; }
  bool matches(const RouterHash& hash) const noexcept;

 private:
  HashPrefix(const RouterHash& bytes, std::size_t bits) : bytes_(bytes), bits_(bits) {}
  RouterHash bytes_;
  std::size_t bits_;
};

enum class MatchKind { ExactHash, Prefix };

/// A lease whose gateway equals the target. This shows routing participation
/// for the destination, not that the target hosts it.
struct GatewayMatch {
  std::size_t leaseset_index = 0;
  std::size_t lease_index = 0;
  MatchKind match_kind = MatchKind::ExactHash;

  friend bool operator==(const GatewayMatch&, const GatewayMatch&) = default;
};

inline constexpr std::string_view kGatewayNote = "routing participation, not hosting";

std::vector<GatewayMatch> gateway_scan(const HashPrefix& target, std::span<const LeaseSet> leasesets);

nlohmann::json gateway_matches_to_json(std::span<const GatewayMatch> matches, std::span<const LeaseSet> leasesets);

}  // namespace shadescope::attribution
