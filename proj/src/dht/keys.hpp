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

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "model/date.hpp"
#include "model/destination.hpp"
#include "model/hash.hpp"

namespace shadescope::dht {

/// SHA-256 of the eight ASCII bytes "yyyyMMdd".
Hash256 daily_mod_key(const UtcDate& date);

/// Combines a destination hash with the daily modifier before the final
/// hash. This is the XOR form; the deployed network concatenates instead,
/// and swapping that in only touches this function.
Hash256 combine_with_modifier(const Hash256& hash, const Hash256& modifier);

struct RoutingKey {
  Hash256 key;
  UtcDate date;

  friend bool operator==(const RoutingKey&, const RoutingKey&) = default;
};

/// SHA-256(hash XOR daily_mod_key(date)).
RoutingKey routing_key(const Hash256& hash, const UtcDate& date);
/// Same with a precomputed modifier, for hot loops.
Hash256 routing_key(const Hash256& hash, const Hash256& modifier);

/// Unsigned 256-bit big-endian integer value of a XOR b.
class XorDistance {
 public:
  constexpr XorDistance() = default;
  constexpr explicit XorDistance(const Hash256& value) : value_(value) {}

  const Hash256& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_.is_zero(); }
  std::string to_hex() const { return value_.to_hex(); }

  friend constexpr auto operator<=>(const XorDistance&, const XorDistance&) noexcept = default;
  friend constexpr bool operator==(const XorDistance&, const XorDistance&) noexcept = default;

 private:
  Hash256 value_;
};

XorDistance xor_distance(const Hash256& a, const Hash256& b) noexcept;

/// argmin over `floodfills` of xor_distance(f, key); equal distances go to
/// the numerically smaller hash. Throws std::invalid_argument when empty.
RouterHash closest_to_key(const Hash256& key, std::span<const RouterHash> floodfills);
RouterHash responsible_floodfill(const DestinationHash& dest, const UtcDate& date,
                                 std::span<const RouterHash> floodfills);

/// The `k` floodfills nearest to `key`, nearest first (same tie rule).
std::vector<RouterHash> nearest_floodfills(const Hash256& key, std::span<const RouterHash> floodfills,
                                           std::size_t k);

struct AssociationResult {
  std::vector<std::string> eepsites;  // associated entries, input order
  std::vector<std::string> warnings;  // undecodable entries
};

/// For each eepsite, associated when no floodfill other than `target` is
/// strictly XOR-closer to the eepsite's routing key than `target` is.
AssociationResult xor_association(const RouterHash& target, std::span<const std::string> eepsites,
                                  std::span<const RouterHash> floodfills, const UtcDate& date);

/// Per-eepsite distance breakdown behind xor_association.
struct AssociationRow {
  std::string b32;
  DestinationHash destination;
  Hash256 routing_key;
  XorDistance target_distance;
  std::optional<RouterHash> nearest_other;
  std::optional<XorDistance> nearest_other_distance;
  bool associated = false;
};

std::vector<AssociationRow> association_table(const RouterHash& target, std::span<const std::string> eepsites,
                                              std::span<const RouterHash> floodfills, const UtcDate& date);

inline constexpr std::string_view kB32Suffix = ".b32.i2p";
inline constexpr std::size_t kB32Chars = 52;

/// "<52 lowercase base32 chars>.b32.i2p" of the identity hash.
std::string derive_b32(const Destination& dest);
std::string b32_from_hash(const DestinationHash& hash);

/// Inverse of b32_from_hash. The suffix is optional and case is folded.
/// Throws EncodingError on a bad alphabet or length.
DestinationHash decode_b32(std::string_view address);

}  // namespace shadescope::dht
