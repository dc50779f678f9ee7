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

// Bit-at-a-time base32/base64 reference encoders and decoders.

#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

inline std::string base32_lower(const std::vector<std::uint8_t>& bytes) {
  const std::string alphabet = "abcdefghijklmnopqrstuvwxyz234567";
  std::vector<int> bits;
  for (auto b : bytes) {
    for (int i = 7; i >= 0; --i) bits.push_back((b >> i) & 1);
  }
  while (bits.size() % 5 != 0) bits.push_back(0);
  std::string out;
  for (std::size_t i = 0; i < bits.size(); i += 5) {
    int v = 0;
    for (int j = 0; j < 5; ++j) v = v * 2 + bits[i + j];
    out += alphabet[static_cast<std::size_t>(v)];
  }
  return out;
}

/// Overlay base64: '-' and '~' replace '+' and '/', '=' padding kept.
inline std::string base64_overlay(const std::vector<std::uint8_t>& bytes) {
  const std::string alphabet = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789-~";
  std::vector<int> bits;
  for (auto b : bytes) {
    for (int i = 7; i >= 0; --i) bits.push_back((b >> i) & 1);
  }
  while (bits.size() % 6 != 0) bits.push_back(0);
  std::string out;
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (int j = 0; j < 6; ++j) v = v * 2 + bits[i + j];
    out += alphabet[static_cast<std::size_t>(v)];
  }
  while (out.size() % 4 != 0) out += '=';
  return out;
}

namespace detail {

inline std::vector<std::uint8_t> decode_bits(const std::string& text, const std::string& alphabet, int width) {
  std::vector<int> bits;
  for (char c : text) {
    if (c == '=') break;
    const auto v = alphabet.find(c);
    if (v == std::string::npos) return {};
    for (int i = width - 1; i >= 0; --i) bits.push_back(static_cast<int>((v >> i) & 1));
  }
  std::vector<std::uint8_t> out;
  for (std::size_t i = 0; i + 8 <= bits.size(); i += 8) {
    int v = 0;
    for (int j = 0; j < 8; ++j) v = v * 2 + bits[i + j];
    out.push_back(static_cast<std::uint8_t>(v));
  }
  return out;
}

}  // namespace detail

/// Inverse of base32_lower; empty on a character outside the alphabet.
inline std::vector<std::uint8_t> from_base32_lower(const std::string& text) {
  return detail::decode_bits(text, "abcdefghijklmnopqrstuvwxyz234567", 5);
}

inline std::vector<std::uint8_t> from_base64_overlay(const std::string& text) {
  return detail::decode_bits(text, "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789-~", 6);
}

}  // namespace oracle
