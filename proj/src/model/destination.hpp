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
#include <span>
#include <vector>

#include "model/hash.hpp"

namespace shadescope {

/// Public identity structure shared by router identities and service
/// destinations: 384 bytes of key material, then a certificate whose type
/// sits at offset 384 and whose big-endian 16-bit length sits at 385..386.
/// The identity spans 387 + certificate-length bytes.
class Destination {
 public:
  static constexpr std::size_t kKeyMaterialSize = 384;
  static constexpr std::size_t kMinSize = 387;

  /// Parses the leading identity of `data`; trailing bytes beyond the
  /// identity are ignored. Throws ParseError(TruncatedIdentity).
  static Destination parse(std::span<const std::uint8_t> data);

  /// Builds an identity from key material and certificate payload.
  static Destination build(std::span<const std::uint8_t> key_material, std::uint8_t cert_type,
                           std::span<const std::uint8_t> cert_payload);

  std::uint8_t cert_type() const noexcept { return bytes_[kKeyMaterialSize]; }
  std::uint16_t cert_length() const noexcept {
    return static_cast<std::uint16_t>((bytes_[385] << 8) | bytes_[386]);
  }
  /// d_s: total identity length, always 387 + cert_length().
  std::size_t size() const noexcept { return bytes_.size(); }
  std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }

  friend bool operator==(const Destination&, const Destination&) = default;

 private:
  explicit Destination(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}
  std::vector<std::uint8_t> bytes_;
};

/// Length d_s = 387 + L read from a raw identity prefix. Throws ParseError
/// when fewer than 387 bytes are available.
std::size_t identity_length(std::span<const std::uint8_t> data);

/// SHA-256 over the first d_s bytes of the identity.
Hash256 hash_identity(const Destination& dest);
Hash256 hash_identity(std::span<const std::uint8_t> raw);

}  // namespace shadescope
