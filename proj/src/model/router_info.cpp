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

#include "model/router_info.hpp"

#include <algorithm>
#include <cctype>

namespace shadescope {

bool is_indexed_key(std::string_view key, std::string_view prefix) {
  if (key.size() <= prefix.size() || key.substr(0, prefix.size()) != prefix) return false;
  const auto digits = key.substr(prefix.size());
  return std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

bool TransportAddress::is_direct() const {
  const auto host = options.find("host");
  const auto port = options.find("port");
  return host != options.end() && port != options.end() && !host->second.empty() && !port->second.empty();
}

bool TransportAddress::declares_introducers() const {
  return std::any_of(options.begin(), options.end(), [](const auto& kv) {
    return is_indexed_key(kv.first, "ih") || is_indexed_key(kv.first, "itag");
  });
}

std::optional<std::string> RouterInfo::option(const std::string& key) const {
  const auto it = options.find(key);
  if (it == options.end()) return std::nullopt;
  return it->second;
}

}  // namespace shadescope
