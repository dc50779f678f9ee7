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

#include "attribution/gateway_scan.hpp"

#include <stdexcept>

#include "model/encoding.hpp"
#include "model/errors.hpp"

namespace shadescope::attribution {

HashPrefix HashPrefix::exact(const RouterHash& hash) { return HashPrefix{hash, 256}; }

HashPrefix HashPrefix::from_bits(const RouterHash& bytes, std::size_t bits) {
  if (bits < kMinBits || bits > 256) {
    throw std::invalid_argument("gateway prefix must cover 32..256 bits, got " + std::to_string(bits));
  }
  return HashPrefix{bytes, bits};
}

HashPrefix HashPrefix::from_base64(std::string_view text) {
  while (!text.empty() && text.back() == '=') text.remove_suffix(1);
  if (text.size() >= 43) return exact(RouterHash::from_base64(text));

  RouterHash::Bytes bytes{};
  std::size_t bit = 0;
  for (char c : text) {
    const int v = base64_value(c);
    if (v < 0) throw EncodingError(std::string("base64: invalid character '") + c + "'");
    for (int b = 5; b >= 0; --b, ++bit) {
      if ((v >> b) & 1) bytes[bit / 8] |= static_cast<std::uint8_t>(0x80 >> (bit % 8));
    }
  }
  return from_bits(RouterHash{bytes}, bit);
}

bool HashPrefix::matches(const RouterHash& hash) const noexcept {
  const std::size_t full = bits_ / 8;
  for (std::size_t i = 0; i < full; ++i) {
    if (hash[i] != bytes_[i]) return false;
  }
  if (const std::size_t rem = bits_ % 8; rem != 0) {
    const auto mask = static_cast<std::uint8_t>(0xff << (8 - rem));
    if ((hash[full] & mask) != (bytes_[full] & mask)) return false;
  }
  return true;
}

std::vector<GatewayMatch> gateway_scan(const HashPrefix& target, std::span<const LeaseSet> leasesets) {
  std::vector<GatewayMatch> out;
  const MatchKind kind = target.is_exact() ? MatchKind::ExactHash : MatchKind::Prefix;
  for (std::size_t i = 0; i < leasesets.size(); ++i) {
    const auto& leases = leasesets[i].leases;
    for (std::size_t j = 0; j < leases.size(); ++j) {
      if (target.matches(leases[j].gateway)) out.push_back({i, j, kind});
    }
  }
  return out;
}

nlohmann::json gateway_matches_to_json(std::span<const GatewayMatch> matches, std::span<const LeaseSet> leasesets) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& m : matches) {
    const auto& ls = leasesets[m.leaseset_index];
    const auto& lease = ls.leases[m.lease_index];
    rows.push_back({{"leaseset_index", m.leaseset_index},
                    {"lease_index", m.lease_index},
                    {"destination", ls.destination_hash.to_base64()},
                    {"b32", ls.b32 ? nlohmann::json(*ls.b32) : nlohmann::json(nullptr)},
                    {"gateway", lease.gateway.to_base64()},
                    {"tunnel_id", lease.tunnel_id},
                    {"match_kind", m.match_kind == MatchKind::ExactHash ? "exact" : "prefix"}});
  }
  return {{"matches", std::move(rows)}, {"note", std::string(kGatewayNote)}};
}

}  // namespace shadescope::attribution
