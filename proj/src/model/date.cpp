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

#include "model/date.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

#include "model/errors.hpp"

namespace shadescope {

UtcDate UtcDate::from_ymd(int year, unsigned month, unsigned day) {
  const std::chrono::year_month_day ymd{std::chrono::year{year}, std::chrono::month{month}, std::chrono::day{day}};
  if (!ymd.ok() || year < 0 || year > 9999) {
    throw EncodingError("invalid calendar date " + std::to_string(year) + "-" + std::to_string(month) + "-" +
                        std::to_string(day));
  }
  return UtcDate{ymd};
}

UtcDate UtcDate::parse(std::string_view text) {
  if (text.size() != 8 || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw EncodingError("date must be yyyyMMdd, got \"" + std::string(text) + "\"");
  }
  const auto num = [&](std::size_t pos, std::size_t len) {
    int v = 0;
    for (std::size_t i = pos; i < pos + len; ++i) v = v * 10 + (text[i] - '0');
    return v;
  };
  return from_ymd(num(0, 4), static_cast<unsigned>(num(4, 2)), static_cast<unsigned>(num(6, 2)));
}

UtcDate UtcDate::today() {
  return UtcDate{std::chrono::year_month_day{std::chrono::floor<std::chrono::days>(std::chrono::system_clock::now())}};
}

std::string UtcDate::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d%02u%02u", static_cast<int>(ymd_.year()), static_cast<unsigned>(ymd_.month()),
                static_cast<unsigned>(ymd_.day()));
  return buf;
}

}  // namespace shadescope
