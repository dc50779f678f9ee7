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
#include <string>
#include <string_view>
#include <vector>

namespace shadescope {

// Overlay base64: RFC 4648 alphabet with '+' -> '-' and '/' -> '~'.
// Encoding always pads with '='; decoding accepts padded or unpadded input.
std::string base64_encode(std::span<const std::uint8_t> data);
std::vector<std::uint8_t> base64_decode(std::string_view text);

// Lowercase RFC 4648 base32 without padding. Decoding is case-insensitive and
// rejects non-zero trailing bits so that encode(decode(s)) == lower(s).
std::string base32_encode(std::span<const std::uint8_t> data);
std::vector<std::uint8_t> base32_decode(std::string_view text);

std::string hex_encode(std::span<const std::uint8_t> data);
std::vector<std::uint8_t> hex_decode(std::string_view text);

/// Map a base64 character to its 6-bit value, or -1.
int base64_value(char c) noexcept;

}  // namespace shadescope
