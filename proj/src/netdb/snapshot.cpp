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

#include "netdb/snapshot.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>

#include "model/capabilities.hpp"
#include "model/errors.hpp"

namespace shadescope::netdb {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kPrefix = "routerInfo-";
constexpr std::string_view kSuffix = ".dat";

bool is_floodfill(const RouterInfo& record) { return parse_caps(record.caps().value_or("")).floodfill; }

std::optional<std::vector<std::uint8_t>> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) return std::nullopt;
  return bytes;
}

nlohmann::json optional_json(const std::optional<std::string>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json optional_count(const std::optional<std::string>& v) {
  if (!v) return nullptr;
  try {
    std::size_t used = 0;
    const auto n = std::stoull(*v, &used);
    if (used == v->size()) return n;
  } catch (const std::exception&) {
  }
  return *v;
}

}  // namespace

const RouterInfo* NetDbSnapshot::find(const RouterHash& hash) const {
  const auto it = records.find(hash);
  return it == records.end() ? nullptr : &it->second;
}

std::vector<RouterHash> NetDbSnapshot::floodfills() const {
  std::vector<RouterHash> out;
  for (const auto& [hash, record] : records) {
    if (is_floodfill(record)) out.push_back(hash);
  }
  return out;
}

SnapshotStats NetDbSnapshot::recount() const {
  SnapshotStats s;
  s.floodfill_count = static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const auto& kv) { return is_floodfill(kv.second); }));
  s.parse_failures = stats.parse_failures;
  s.lenient_recovered = recovered.size();
  s.duplicates = stats.duplicates;
  s.total = records.size() + s.parse_failures + s.duplicates;
  return s;
}

std::string router_info_file_name(const RouterHash& hash) {
  return std::string(kPrefix) + hash.to_base64() + std::string(kSuffix);
}

std::optional<RouterHash> hash_from_file_name(std::string_view name) {
  if (name.size() <= kPrefix.size() + kSuffix.size() || !name.starts_with(kPrefix) || !name.ends_with(kSuffix)) {
    return std::nullopt;
  }
  try {
    return RouterHash::from_base64(name.substr(kPrefix.size(), name.size() - kPrefix.size() - kSuffix.size()));
  } catch (const EncodingError&) {
    return std::nullopt;
  }
}

NetDbSnapshot make_snapshot(std::vector<RouterInfo> records) {
  NetDbSnapshot snap;
  for (auto& r : records) {
    const auto hash = r.hash;
    snap.records.insert_or_assign(hash, std::move(r));
  }
  snap.stats = snap.recount();
  return snap;
}

NetDbSnapshot load_netdb_dir(const fs::path& dir) {
  NetDbSnapshot snap;
  snap.source_dir = dir;

  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (name.starts_with(kPrefix) && name.ends_with(kSuffix) && !entry.is_directory()) files.push_back(entry.path());
  }
  // Directory iteration order is unspecified; sort for reproducible warnings.
  std::sort(files.begin(), files.end());

  for (const auto& path : files) {
    ++snap.stats.total;
    const auto name = path.filename().string();
    const auto bytes = read_file(path);
    if (!bytes) {
      ++snap.stats.parse_failures;
      snap.warnings.push_back(name + ": unreadable");
      continue;
    }
    try {
      RouterInfo record = decode_router_info(*bytes);
      if (const auto named = hash_from_file_name(name); named && *named != record.hash) {
        snap.warnings.push_back(name + ": file name does not match identity hash " + record.hash.to_base64());
      }
      const auto hash = record.hash;
      if (!snap.records.insert_or_assign(hash, std::move(record)).second) {
        ++snap.stats.duplicates;
        snap.warnings.push_back(name + ": duplicate record for " + hash.to_base64());
      }
    } catch (const ParseError& e) {
      ++snap.stats.parse_failures;
      snap.warnings.push_back(name + ": " + e.what());
      LenientRecord fields = lenient_extract(*bytes);
      if (fields.caps || fields.version || !fields.address_styles.empty()) {
        snap.recovered.emplace(name, RecoveredRecord{name, e.what(), std::move(fields)});
      }
    }
  }
  snap.stats.floodfill_count = snap.recount().floodfill_count;
  snap.stats.lenient_recovered = snap.recovered.size();
  return snap;
}

void write_netdb_dir(const fs::path& dir, const std::vector<RouterInfo>& records) {
  fs::create_directories(dir);
  for (const auto& r : records) {
    const auto bytes = encode_router_info(r);
    std::ofstream out(dir / router_info_file_name(r.hash), std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("cannot write " + (dir / router_info_file_name(r.hash)).string());
  }
}

nlohmann::json record_to_json(const RouterInfo& record) {
  nlohmann::json addresses = nlohmann::json::array();
  for (const auto& a : record.addresses) {
    const auto host = a.options.find("host");
    const auto port = a.options.find("port");
    addresses.push_back({
        {"style", a.style},
        {"host", host == a.options.end() ? nlohmann::json(nullptr) : nlohmann::json(host->second)},
        {"port", port == a.options.end() ? nlohmann::json(nullptr) : optional_count(port->second)},
    });
  }
  return {
      {"hash", record.hash.to_base64()},
      {"caps", optional_json(record.caps())},
      {"alpha", has_direct_address(record)},
      {"iota", has_introducers(record)},
      {"version", optional_json(record.version())},
      {"knownRouters", optional_count(record.option("netdb.knownRouters"))},
      {"knownLeaseSets", optional_count(record.option("netdb.knownLeaseSets"))},
      {"addresses", std::move(addresses)},
  };
}

nlohmann::json snapshot_to_json(const NetDbSnapshot& snapshot) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& [hash, record] : snapshot.records) records.push_back(record_to_json(record));
  nlohmann::json recovered = nlohmann::json::array();
  for (const auto& [name, r] : snapshot.recovered) {
    recovered.push_back({{"file", name},
                         {"error", r.error},
                         {"caps", optional_json(r.fields.caps)},
                         {"version", optional_json(r.fields.version)},
                         {"styles", r.fields.address_styles}});
  }
  return {
      {"source_dir", snapshot.source_dir ? nlohmann::json(snapshot.source_dir->string()) : nlohmann::json(nullptr)},
      {"stats",
       {{"total", snapshot.stats.total},
        {"records", snapshot.records.size()},
        {"floodfill_count", snapshot.stats.floodfill_count},
        {"parse_failures", snapshot.stats.parse_failures},
        {"lenient_recovered", snapshot.stats.lenient_recovered}}},
      {"records", std::move(records)},
      {"recovered", std::move(recovered)},
      {"warnings", snapshot.warnings},
  };
}

}  // namespace shadescope::netdb
