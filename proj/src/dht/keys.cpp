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

#include "dht/keys.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "model/encoding.hpp"
#include "model/errors.hpp"

namespace shadescope::dht {

Hash256 daily_mod_key(const UtcDate& date) { return sha256(date.to_string()); }

Hash256 combine_with_modifier(const Hash256& hash, const Hash256& modifier) { return hash ^ modifier; }

Hash256 routing_key(const Hash256& hash, const Hash256& modifier) {
  return sha256(combine_with_modifier(hash, modifier).span());
}

RoutingKey routing_key(const Hash256& hash, const UtcDate& date) {
  return RoutingKey{routing_key(hash, daily_mod_key(date)), date};
}

XorDistance xor_distance(const Hash256& a, const Hash256& b) noexcept { return XorDistance{a ^ b}; }

namespace {

// Strict weak order: nearer first, then smaller hash.
struct NearerTo {
  const Hash256& key;
  bool operator()(const RouterHash& a, const RouterHash& b) const noexcept {
    const auto da = xor_distance(a, key);
    const auto db = xor_distance(b, key);
    if (da != db) return da < db;
    return a < b;
  }
};

}  // namespace

RouterHash closest_to_key(const Hash256& key, std::span<const RouterHash> floodfills) {
  if (floodfills.empty()) throw std::invalid_argument("floodfill set is empty");
  return *std::min_element(floodfills.begin(), floodfills.end(), NearerTo{key});
}

RouterHash responsible_floodfill(const DestinationHash& dest, const UtcDate& date,
                                 std::span<const RouterHash> floodfills) {
  if (floodfills.empty()) throw std::invalid_argument("floodfill set is empty");
  return closest_to_key(routing_key(dest, date).key, floodfills);
}

std::vector<RouterHash> nearest_floodfills(const Hash256& key, std::span<const RouterHash> floodfills,
                                           std::size_t k) {
  std::vector<RouterHash> out(floodfills.begin(), floodfills.end());
  k = std::min(k, out.size());
  std::partial_sort(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k), out.end(), NearerTo{key});
  out.resize(k);
  return out;
}

AssociationResult xor_association(const RouterHash& target, std::span<const std::string> eepsites,
                                  std::span<const RouterHash> floodfills, const UtcDate& date) {
  AssociationResult result;
  const Hash256 modifier = daily_mod_key(date);
  for (const auto& site : eepsites) {
    DestinationHash dest;
    try {
      dest = decode_b32(site);
    } catch (const EncodingError& e) {
      result.warnings.push_back("skipping \"" + site + "\": " + e.what());
      continue;
    }
    const Hash256 key = routing_key(dest, modifier);
    const XorDistance target_distance = xor_distance(target, key);
    bool closest = true;
    for (const auto& f : floodfills) {
      if (f == target) continue;
      if (xor_distance(f, key) < target_distance) {
        closest = false;
        break;
      }
    }
    if (closest) result.eepsites.push_back(site);
  }
  return result;
}

std::vector<AssociationRow> association_table(const RouterHash& target, std::span<const std::string> eepsites,
                                              std::span<const RouterHash> floodfills, const UtcDate& date) {
  std::vector<AssociationRow> rows;
  const Hash256 modifier = daily_mod_key(date);
  std::vector<RouterHash> others;
  std::copy_if(floodfills.begin(), floodfills.end(), std::back_inserter(others),
               [&](const RouterHash& f) { return f != target; });
  for (const auto& site : eepsites) {
    AssociationRow row;
    try {
      row.destination = decode_b32(site);
    } catch (const EncodingError&) {
      continue;
    }
    row.b32 = site;
    row.routing_key = routing_key(row.destination, modifier);
    row.target_distance = xor_distance(target, row.routing_key);
    if (!others.empty()) {
      row.nearest_other = closest_to_key(row.routing_key, others);
      row.nearest_other_distance = xor_distance(*row.nearest_other, row.routing_key);
    }
    row.associated = !row.nearest_other_distance || !(*row.nearest_other_distance < row.target_distance);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string b32_from_hash(const DestinationHash& hash) {
  return base32_encode(hash.span()) + std::string(kB32Suffix);
}

std::string derive_b32(const Destination& dest) { return b32_from_hash(hash_identity(dest)); }

DestinationHash decode_b32(std::string_view address) {
  std::string lowered(address);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  std::string_view body = lowered;
  if (body.ends_with(kB32Suffix)) body.remove_suffix(kB32Suffix.size());
  if (body.size() != kB32Chars) {
    throw EncodingError("b32 address must have 52 characters before the suffix, got " + std::to_string(body.size()));
  }
  return DestinationHash::from_bytes(base32_decode(body));
}

}  // namespace shadescope::dht
