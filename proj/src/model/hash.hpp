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

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>

namespace shadescope {

/// 32-byte SHA-256 identifier. Ordering is the big-endian unsigned integer
/// order, which is plain lexicographic byte order.
class Hash256 {
 public:
  static constexpr std::size_t kSize = 32;
  using Bytes = std::array<std::uint8_t, kSize>;

  constexpr Hash256() noexcept : bytes_{} {}
  constexpr explicit Hash256(const Bytes& bytes) noexcept : bytes_(bytes) {}

  /// Throws EncodingError unless `data` is exactly 32 bytes.
  static Hash256 from_bytes(std::span<const std::uint8_t> data);
  static Hash256 from_base64(std::string_view text);
  static Hash256 from_hex(std::string_view text);

  const Bytes& bytes() const noexcept { return bytes_; }
  Bytes& bytes() noexcept { return bytes_; }
  std::span<const std::uint8_t, kSize> span() const noexcept { return bytes_; }
  std::uint8_t operator[](std::size_t i) const noexcept { return bytes_[i]; }

  std::string to_base64() const;
  std::string to_hex() const;

  bool is_zero() const noexcept;

  friend constexpr auto operator<=>(const Hash256&, const Hash256&) noexcept = default;
  friend constexpr bool operator==(const Hash256&, const Hash256&) noexcept = default;

 private:
  Bytes bytes_;
};

using RouterHash = Hash256;
using DestinationHash = Hash256;

Hash256 sha256(std::span<const std::uint8_t> data);
Hash256 sha256(std::string_view text);

/// Byte-wise XOR.
Hash256 operator^(const Hash256& a, const Hash256& b) noexcept;

}  // namespace shadescope

template <>
struct std::hash<shadescope::Hash256> {
  std::size_t operator()(const shadescope::Hash256& h) const noexcept {
    // Digest bytes are already uniformly distributed.
    std::size_t v = 0;
    for (std::size_t i = 0; i < sizeof(v); ++i) v = (v << 8) | h[i];
    return v;
  }
};
