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

#include "model/hash.hpp"

#include <openssl/sha.h>

#include <algorithm>

#include "model/encoding.hpp"
#include "model/errors.hpp"

namespace shadescope {

Hash256 Hash256::from_bytes(std::span<const std::uint8_t> data) {
  if (data.size() != kSize) {
    throw EncodingError("hash must be 32 bytes, got " + std::to_string(data.size()));
  }
  Bytes bytes{};
  std::copy(data.begin(), data.end(), bytes.begin());
  return Hash256{bytes};
}

Hash256 Hash256::from_base64(std::string_view text) { return from_bytes(base64_decode(text)); }

Hash256 Hash256::from_hex(std::string_view text) { return from_bytes(hex_decode(text)); }

std::string Hash256::to_base64() const { return base64_encode(bytes_); }

std::string Hash256::to_hex() const { return hex_encode(bytes_); }

bool Hash256::is_zero() const noexcept {
  return std::all_of(bytes_.begin(), bytes_.end(), [](std::uint8_t b) { return b == 0; });
}

Hash256 sha256(std::span<const std::uint8_t> data) {
  Hash256::Bytes out{};
  SHA256(data.data(), data.size(), out.data());
  return Hash256{out};
}

Hash256 sha256(std::string_view text) {
  return sha256(std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

Hash256 operator^(const Hash256& a, const Hash256& b) noexcept {
  Hash256::Bytes out{};
  for (std::size_t i = 0; i < Hash256::kSize; ++i) out[i] = a[i] ^ b[i];
  return Hash256{out};
}

}  // namespace shadescope
