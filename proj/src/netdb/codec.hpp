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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "model/router_info.hpp"

namespace shadescope::netdb {

// Record layout (all integers big-endian):
//
//   identity            d_s bytes (387 + certificate length)
//   published           8 bytes, epoch milliseconds
//   address count       1 byte
//   address[i]          cost (1) | expiration ms (8) | style (len8 string) | options mapping
//   peer count          1 byte, always 0
//   options             mapping
//   signature           remaining bytes, opaque
//
// mapping := size (2 bytes) then repeated  key(len8 string) '=' value(len8 string) ';'
// Keys are emitted in ascending order.

inline constexpr std::size_t kMaxMappingBytes = 0xffff;

/// Strict decoder. Throws ParseError naming the failing offset.
RouterInfo decode_router_info(std::span<const std::uint8_t> bytes);

/// Throws EncodeError for oversize mappings/strings, invalid transport styles,
/// or a hash that does not match the identity.
std::vector<std::uint8_t> encode_router_info(const RouterInfo& record);

/// Encodes a mapping body including its 2-byte size prefix.
std::vector<std::uint8_t> encode_mapping(const OptionMap& options);

/// True when `style` is a non-empty run of [A-Za-z0-9] of at most 255 chars.
bool is_valid_style(std::string_view style) noexcept;

/// Best-effort fields recovered from arbitrary bytes.
struct LenientRecord {
  std::optional<std::string> caps;
  std::optional<std::string> version;
  std::optional<std::uint64_t> known_routers;
  std::optional<std::uint64_t> known_leasesets;
  std::vector<std::string> address_styles;
  bool direct_address_hint = false;  // a "host=" option was seen
  bool introducer_hint = false;      // an "ih<n>=" / "itag<n>=" option was seen
};

/// Scans for printable "key=" anchors of the known option keys and reads the
/// length-prefixed printable value that follows. Never throws.
LenientRecord lenient_extract(std::span<const std::uint8_t> bytes);

}  // namespace shadescope::netdb
