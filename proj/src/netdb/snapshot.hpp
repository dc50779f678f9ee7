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

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "model/router_info.hpp"
#include "netdb/codec.hpp"

namespace shadescope::netdb {

struct SnapshotStats {
  std::size_t total = 0;            // files scanned
  std::size_t floodfill_count = 0;  // strict records whose caps carry 'f'
  std::size_t parse_failures = 0;   // files the strict decoder rejected or could not read
  std::size_t lenient_recovered = 0;
  std::size_t duplicates = 0;       // files repeating an already-loaded hash

  friend bool operator==(const SnapshotStats&, const SnapshotStats&) = default;
};

/// A record the strict decoder rejected but the lenient extractor could
/// still read. Keyed by the hash in the file name.
struct RecoveredRecord {
  std::string file_name;
  std::string error;
  LenientRecord fields;
};

struct NetDbSnapshot {
  std::map<RouterHash, RouterInfo> records;
  std::map<std::string, RecoveredRecord> recovered;  // by file name
  std::optional<std::filesystem::path> source_dir;
  SnapshotStats stats;
  std::vector<std::string> warnings;

  const RouterInfo* find(const RouterHash& hash) const;
  std::vector<RouterHash> floodfills() const;

  /// Re-derives stats from the record set; total = records + failures + duplicates.
  SnapshotStats recount() const;
};

/// "routerInfo-<base64hash>.dat"
std::string router_info_file_name(const RouterHash& hash);
/// Returns the hash encoded in a routerInfo file name, if it is one.
std::optional<RouterHash> hash_from_file_name(std::string_view file_name);

/// Builds a snapshot from in-memory records; stats are derived.
NetDbSnapshot make_snapshot(std::vector<RouterInfo> records);

/// Decodes every routerInfo-*.dat under `dir` (recursing into the r?
/// subdirectories used by deployed routers). Strict decode first, lenient
/// fallback for failures. Throws std::filesystem::filesystem_error if `dir`
/// cannot be listed.
NetDbSnapshot load_netdb_dir(const std::filesystem::path& dir);

/// Writes each record as routerInfo-<b64>.dat under `dir`.
void write_netdb_dir(const std::filesystem::path& dir, const std::vector<RouterInfo>& records);

nlohmann::json record_to_json(const RouterInfo& record);
nlohmann::json snapshot_to_json(const NetDbSnapshot& snapshot);

}  // namespace shadescope::netdb
