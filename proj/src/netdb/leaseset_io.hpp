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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "model/lease_set.hpp"

namespace shadescope::netdb {

// Text fixture, one LeaseSet per line:
//
//   <dest_hash_b64> <b32> <gateway_b64>:<tunnel_id>:<expiry_ms>[,<gateway_b64>:<tunnel_id>:<expiry_ms>...]
//
// Blank lines and lines starting with '#' are skipped. A line with no
// leases carries only the first two fields. "-" stands for an unknown b32.

struct LeaseSetFile {
  std::vector<LeaseSet> leasesets;
  std::vector<std::string> warnings;  // "line N: ..." for every rejected line
};

/// Throws std::invalid_argument describing the defect.
LeaseSet parse_leaseset_line(std::string_view line);
std::string format_leaseset_line(const LeaseSet& ls);

LeaseSetFile parse_leasesets(std::string_view text);
/// Throws IoError if the file cannot be opened.
LeaseSetFile load_leasesets(const std::filesystem::path& path);
void write_leasesets(const std::filesystem::path& path, const std::vector<LeaseSet>& leasesets);

}  // namespace shadescope::netdb
