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

#include "netdb/leaseset_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "model/errors.hpp"

namespace shadescope::netdb {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename T>
T parse_number(std::string_view text, const char* what) {
  T v{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument(std::string("bad ") + what + " \"" + std::string(text) + "\"");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

}  // namespace

LeaseSet parse_leaseset_line(std::string_view line) {
  const auto parts = fields(line);
  if (parts.size() < 2 || parts.size() > 3) {
    throw std::invalid_argument("expected 2 or 3 whitespace-separated fields, got " + std::to_string(parts.size()));
  }
  LeaseSet ls;
  try {
    ls.destination_hash = DestinationHash::from_base64(parts[0]);
  } catch (const EncodingError& e) {
    throw std::invalid_argument(std::string("destination hash: ") + e.what());
  }
  if (parts[1] != "-") ls.b32 = std::string(parts[1]);
  if (parts.size() == 3) {
    for (const auto lease_text : split(parts[2], ',')) {
      const auto lease_parts = split(lease_text, ':');
      if (lease_parts.size() != 3) {
        throw std::invalid_argument("lease \"" + std::string(lease_text) + "\" is not gateway:tunnel:expiry");
      }
      Lease lease;
      try {
        lease.gateway = RouterHash::from_base64(lease_parts[0]);
      } catch (const EncodingError& e) {
        throw std::invalid_argument(std::string("gateway hash: ") + e.what());
      }
      lease.tunnel_id = parse_number<std::uint32_t>(lease_parts[1], "tunnel id");
      lease.expiry_ms = parse_number<std::uint64_t>(lease_parts[2], "expiry");
      ls.leases.push_back(lease);
    }
  }
  return ls;
}

std::string format_leaseset_line(const LeaseSet& ls) {
  std::string line = ls.destination_hash.to_base64() + ' ' + ls.b32.value_or("-");
  for (std::size_t i = 0; i < ls.leases.size(); ++i) {
    line += i == 0 ? ' ' : ',';
    const auto& l = ls.leases[i];
    line += l.gateway.to_base64() + ':' + std::to_string(l.tunnel_id) + ':' + std::to_string(l.expiry_ms);
  }
  return line;
}

LeaseSetFile parse_leasesets(std::string_view text) {
  LeaseSetFile out;
  std::size_t line_no = 0;
  for (const auto raw : split(text, '\n')) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    try {
      out.leasesets.push_back(parse_leaseset_line(line));
    } catch (const std::invalid_argument& e) {
      out.warnings.push_back("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

LeaseSetFile load_leasesets(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open leaseset file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_leasesets(buf.str());
}

void write_leasesets(const std::filesystem::path& path, const std::vector<LeaseSet>& leasesets) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write leaseset file " + path.string());
  for (const auto& ls : leasesets) out << format_leaseset_line(ls) << '\n';
}

}  // namespace shadescope::netdb
