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

#include <chrono>
#include <string>
#include <string_view>

namespace shadescope {

/// A UTC calendar day, rendered as "yyyyMMdd".
class UtcDate {
 public:
  /// Throws EncodingError on anything but 8 digits naming a real date.
  static UtcDate parse(std::string_view yyyymmdd);
  static UtcDate today();
  static UtcDate from_ymd(int year, unsigned month, unsigned day);

  std::string to_string() const;
  UtcDate next() const { return UtcDate{std::chrono::sys_days{ymd_} + std::chrono::days{1}}; }
  std::chrono::year_month_day ymd() const noexcept { return ymd_; }

  friend bool operator==(const UtcDate&, const UtcDate&) = default;

 private:
  explicit UtcDate(std::chrono::year_month_day ymd) : ymd_(ymd) {}
  std::chrono::year_month_day ymd_;
};

}  // namespace shadescope
