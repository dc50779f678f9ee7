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

#include <compare>
#include <string_view>

namespace shadescope {

/// Visibility class 1..8. Levels 1-7 are directory-visible (layer 1);
/// level 8 has no directory record (layer 2).
class Shade {
 public:
  static constexpr int kMinLevel = 1;
  static constexpr int kMaxLevel = 8;

  /// Throws std::out_of_range outside 1..8.
  static Shade from_level(int level);
  /// Case-sensitive match against the names; throws std::invalid_argument.
  static Shade from_name(std::string_view name);

  static Shade beacon() noexcept { return Shade{1}; }
  static Shade exclusive() noexcept { return Shade{8}; }

  int level() const noexcept { return level_; }
  std::string_view name() const noexcept;
  int layer() const noexcept { return level_ == kMaxLevel ? 2 : 1; }
  std::string_view role() const noexcept;

  friend constexpr auto operator<=>(const Shade&, const Shade&) noexcept = default;

 private:
  constexpr explicit Shade(int level) noexcept : level_(level) {}
  int level_;
};

}  // namespace shadescope
