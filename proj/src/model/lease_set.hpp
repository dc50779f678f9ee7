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
#include <optional>
#include <string>
#include <vector>

#include "model/hash.hpp"

namespace shadescope {

/// One inbound tunnel entry. The gateway is the first hop of the tunnel,
/// never the hosting router.
struct Lease {
  RouterHash gateway;
  std::uint32_t tunnel_id = 0;
  std::uint64_t expiry_ms = 0;

  friend bool operator==(const Lease&, const Lease&) = default;
};

struct LeaseSet {
  DestinationHash destination_hash;
  std::optional<std::string> b32;
  std::vector<Lease> leases;

  friend bool operator==(const LeaseSet&, const LeaseSet&) = default;
};

}  // namespace shadescope
