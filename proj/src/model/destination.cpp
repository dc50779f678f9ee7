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

#include "model/destination.hpp"

#include <string>

#include "model/errors.hpp"

namespace shadescope {

std::size_t identity_length(std::span<const std::uint8_t> data) {
  if (data.size() < Destination::kMinSize) {
    throw ParseError(ParseErrorKind::TruncatedIdentity, data.size(),
                     "identity needs at least 387 bytes, have " + std::to_string(data.size()));
  }
  const std::size_t cert_len = (std::size_t{data[385]} << 8) | data[386];
  return Destination::kMinSize + cert_len;
}

Destination Destination::parse(std::span<const std::uint8_t> data) {
  const std::size_t ds = identity_length(data);
  if (data.size() < ds) {
    throw ParseError(ParseErrorKind::TruncatedIdentity, data.size(),
                     "certificate declares d_s=" + std::to_string(ds) + ", have " + std::to_string(data.size()));
  }
  return Destination(std::vector<std::uint8_t>(data.begin(), data.begin() + static_cast<std::ptrdiff_t>(ds)));
}

Destination Destination::build(std::span<const std::uint8_t> key_material, std::uint8_t cert_type,
                               std::span<const std::uint8_t> cert_payload) {
  if (key_material.size() != kKeyMaterialSize) {
    throw EncodeError("identity key material must be 384 bytes");
  }
  if (cert_payload.size() > 0xffff) throw EncodeError("certificate payload exceeds 65535 bytes");
  std::vector<std::uint8_t> bytes(key_material.begin(), key_material.end());
  bytes.push_back(cert_type);
  bytes.push_back(static_cast<std::uint8_t>(cert_payload.size() >> 8));
  bytes.push_back(static_cast<std::uint8_t>(cert_payload.size() & 0xff));
  bytes.insert(bytes.end(), cert_payload.begin(), cert_payload.end());
  return Destination(std::move(bytes));
}

Hash256 hash_identity(const Destination& dest) { return sha256(dest.bytes()); }

Hash256 hash_identity(std::span<const std::uint8_t> raw) { return hash_identity(Destination::parse(raw)); }

}  // namespace shadescope
