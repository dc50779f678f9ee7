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

#include "model/shade.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace shadescope {

namespace {

struct ShadeRow {
  std::string_view name;
  std::string_view role;
};

constexpr std::array<ShadeRow, 8> kRows{{
    {"Beacon", "NetDB anchor"},
    {"Relay", "Traffic relay"},
    {"Passive", "BW donor"},
    {"Cloaked", "Hidden relay"},
    {"Veiled", "Covert relay"},
    {"Declared", "Semi-hidden"},
    {"Phantom", "Ghost node"},
    {"Exclusive", "Stealth C2"},
}};

}  // namespace

Shade Shade::from_level(int level) {
  if (level < kMinLevel || level > kMaxLevel) {
    throw std::out_of_range("shade level must be 1..8, got " + std::to_string(level));
  }
  return Shade{level};
}

Shade Shade::from_name(std::string_view name) {
  for (std::size_t i = 0; i < kRows.size(); ++i) {
    if (kRows[i].name == name) return Shade{static_cast<int>(i) + 1};
  }
  throw std::invalid_argument("unknown shade name: " + std::string(name));
}

std::string_view Shade::name() const noexcept { return kRows[static_cast<std::size_t>(level_ - 1)].name; }

std::string_view Shade::role() const noexcept { return kRows[static_cast<std::size_t>(level_ - 1)].role; }

}  // namespace shadescope
