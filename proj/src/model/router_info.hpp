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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "model/destination.hpp"
#include "model/hash.hpp"

namespace shadescope {

using OptionMap = std::map<std::string, std::string>;

struct TransportAddress {
  std::uint8_t cost = 0;
  std::uint64_t expiration_ms = 0;
  std::string style;  // "NTCP2", "SSU2", ...
  OptionMap options;  // host, port, ih0, itag0, ...

  /// Explicit host + port pair present.
  bool is_direct() const;
  /// Any "ih<n>" / "itag<n>" key present.
  bool declares_introducers() const;

  friend bool operator==(const TransportAddress&, const TransportAddress&) = default;
};

/// A NetDB directory record. Signature bytes are carried opaquely.
struct RouterInfo {
  RouterHash hash;
  Destination identity;
  std::uint64_t published_ms = 0;
  std::vector<TransportAddress> addresses;
  OptionMap options;
  std::vector<std::uint8_t> signature;

  std::optional<std::string> option(const std::string& key) const;
  std::optional<std::string> caps() const { return option("caps"); }
  std::optional<std::string> version() const { return option("router.version"); }

  friend bool operator==(const RouterInfo&, const RouterInfo&) = default;
};

/// True for keys of the form prefix followed by one or more decimal digits.
bool is_indexed_key(std::string_view key, std::string_view prefix);

}  // namespace shadescope
