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

#include "netdb/codec.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cctype>

#include "model/errors.hpp"

namespace shadescope::netdb {

namespace {

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> data) : data_(data) {}

  std::size_t offset() const noexcept { return pos_; }
  std::size_t remaining() const noexcept { return data_.size() - pos_; }

  void require(std::size_t n, ParseErrorKind kind, const char* what) const {
    if (remaining() < n) {
      throw ParseError(kind, pos_,
                       std::string(what) + " needs " + std::to_string(n) + " bytes, have " + std::to_string(remaining()));
    }
  }

  std::uint8_t u8(ParseErrorKind kind, const char* what) {
    require(1, kind, what);
    return data_[pos_++];
  }

  std::uint16_t u16(ParseErrorKind kind, const char* what) {
    require(2, kind, what);
    const auto v = static_cast<std::uint16_t>((data_[pos_] << 8) | data_[pos_ + 1]);
    pos_ += 2;
    return v;
  }

  std::uint64_t u64(ParseErrorKind kind, const char* what) {
    require(8, kind, what);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | data_[pos_++];
    return v;
  }

  std::span<const std::uint8_t> take(std::size_t n, ParseErrorKind kind, const char* what) {
    require(n, kind, what);
    auto out = data_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

  std::string string8(ParseErrorKind kind, const char* what) {
    const std::size_t len = u8(kind, what);
    const auto bytes = take(len, kind, what);
    return std::string(bytes.begin(), bytes.end());
  }

  std::span<const std::uint8_t> rest() {
    auto out = data_.subspan(pos_);
    pos_ = data_.size();
    return out;
  }

 private:
  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

OptionMap read_mapping(Reader& in) {
  const std::size_t start = in.offset();
  const std::size_t size = in.u16(ParseErrorKind::TruncatedMapping, "mapping size");
  if (in.remaining() < size) {
    throw ParseError(ParseErrorKind::TruncatedMapping, in.offset(),
                     "mapping declares " + std::to_string(size) + " bytes, have " + std::to_string(in.remaining()));
  }
  const std::size_t body_start = in.offset();
  Reader body(in.take(size, ParseErrorKind::TruncatedMapping, "mapping body"));
  const auto at = [&] { return body_start + body.offset(); };

  OptionMap options;
  while (body.remaining() > 0) {
    const std::size_t entry_at = at();
    try {
      std::string key = body.string8(ParseErrorKind::MappingLengthMismatch, "mapping key");
      if (body.u8(ParseErrorKind::MappingLengthMismatch, "'='") != '=') {
        throw ParseError(ParseErrorKind::MalformedMapping, at() - 1, "expected '=' after key \"" + key + "\"");
      }
      std::string value = body.string8(ParseErrorKind::MappingLengthMismatch, "mapping value");
      if (body.u8(ParseErrorKind::MappingLengthMismatch, "';'") != ';') {
        throw ParseError(ParseErrorKind::MalformedMapping, at() - 1, "expected ';' after value of \"" + key + "\"");
      }
      options.insert_or_assign(std::move(key), std::move(value));
    } catch (const ParseError& e) {
      if (e.kind() != ParseErrorKind::MappingLengthMismatch) throw;
      throw ParseError(ParseErrorKind::MappingLengthMismatch, entry_at,
                       "entry overruns mapping of " + std::to_string(size) + " bytes starting at " +
                           std::to_string(start));
    }
  }
  return options;
}

void append_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(v >> shift));
}

void append_string8(std::vector<std::uint8_t>& out, std::string_view s, const char* what) {
  if (s.size() > 0xff) throw EncodeError(std::string(what) + " longer than 255 bytes: " + std::string(s.substr(0, 32)));
  out.push_back(static_cast<std::uint8_t>(s.size()));
  out.insert(out.end(), s.begin(), s.end());
}

bool printable(std::uint8_t c) noexcept { return c >= 0x20 && c <= 0x7e; }

std::optional<std::uint64_t> parse_count(const std::string& text) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

}  // namespace

bool is_valid_style(std::string_view style) noexcept {
  return !style.empty() && style.size() <= 0xff &&
         std::all_of(style.begin(), style.end(), [](unsigned char c) { return std::isalnum(c) != 0; });
}

RouterInfo decode_router_info(std::span<const std::uint8_t> bytes) {
  Reader in(bytes);
  const std::size_t ds = identity_length(bytes);
  const auto identity_bytes = in.take(ds, ParseErrorKind::TruncatedIdentity, "identity");

  RouterInfo record{.hash = {},
                    .identity = Destination::parse(identity_bytes),
                    .published_ms = 0,
                    .addresses = {},
                    .options = {},
                    .signature = {}};
  record.hash = hash_identity(record.identity);
  record.published_ms = in.u64(ParseErrorKind::TruncatedHeader, "published timestamp");

  const std::size_t address_count = in.u8(ParseErrorKind::TruncatedHeader, "address count");
  record.addresses.reserve(address_count);
  for (std::size_t i = 0; i < address_count; ++i) {
    TransportAddress addr;
    addr.cost = in.u8(ParseErrorKind::TruncatedAddress, "address cost");
    addr.expiration_ms = in.u64(ParseErrorKind::TruncatedAddress, "address expiration");
    addr.style = in.string8(ParseErrorKind::TruncatedAddress, "transport style");
    addr.options = read_mapping(in);
    record.addresses.push_back(std::move(addr));
  }

  const std::size_t peer_at = in.offset();
  if (const auto peers = in.u8(ParseErrorKind::TruncatedHeader, "peer count"); peers != 0) {
    throw ParseError(ParseErrorKind::UnexpectedPeers, peer_at, "peer count must be 0, got " + std::to_string(peers));
  }
  record.options = read_mapping(in);
  const auto sig = in.rest();
  record.signature.assign(sig.begin(), sig.end());
  return record;
}

std::vector<std::uint8_t> encode_mapping(const OptionMap& options) {
  std::vector<std::uint8_t> body;
  for (const auto& [key, value] : options) {
    append_string8(body, key, "mapping key");
    body.push_back('=');
    append_string8(body, value, "mapping value");
    body.push_back(';');
  }
  if (body.size() > kMaxMappingBytes) {
    throw EncodeError("mapping of " + std::to_string(body.size()) + " bytes exceeds 65535");
  }
  std::vector<std::uint8_t> out;
  out.reserve(body.size() + 2);
  out.push_back(static_cast<std::uint8_t>(body.size() >> 8));
  out.push_back(static_cast<std::uint8_t>(body.size() & 0xff));
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

std::vector<std::uint8_t> encode_router_info(const RouterInfo& record) {
  if (record.hash != hash_identity(record.identity)) {
    throw EncodeError("record hash does not match SHA-256 of its identity");
  }
  if (record.addresses.size() > 0xff) throw EncodeError("more than 255 addresses");

  std::vector<std::uint8_t> out(record.identity.bytes().begin(), record.identity.bytes().end());
  append_u64(out, record.published_ms);
  out.push_back(static_cast<std::uint8_t>(record.addresses.size()));
  for (const auto& addr : record.addresses) {
    if (!is_valid_style(addr.style)) throw EncodeError("invalid transport style \"" + addr.style + "\"");
    out.push_back(addr.cost);
    append_u64(out, addr.expiration_ms);
    append_string8(out, addr.style, "transport style");
    const auto mapping = encode_mapping(addr.options);
    out.insert(out.end(), mapping.begin(), mapping.end());
  }
  out.push_back(0);  // peers
  const auto mapping = encode_mapping(record.options);
  out.insert(out.end(), mapping.begin(), mapping.end());
  out.insert(out.end(), record.signature.begin(), record.signature.end());
  return out;
}

LenientRecord lenient_extract(std::span<const std::uint8_t> bytes) {
  LenientRecord out;
  const std::size_t n = bytes.size();

  // Candidate entries: len8 printable key, '=', len8 printable value, ';'.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t key_len = bytes[i];
    if (key_len < 2 || key_len > 64) continue;
    const std::size_t key_at = i + 1;
    const std::size_t eq_at = key_at + key_len;
    if (eq_at + 1 >= n || bytes[eq_at] != '=') continue;
    // anchor "key=" must be a printable run of at least four bytes
    if (key_len + 1 < 4) continue;
    if (!std::all_of(bytes.begin() + static_cast<std::ptrdiff_t>(key_at),
                     bytes.begin() + static_cast<std::ptrdiff_t>(eq_at), printable)) {
      continue;
    }
    const std::string key(bytes.begin() + static_cast<std::ptrdiff_t>(key_at),
                          bytes.begin() + static_cast<std::ptrdiff_t>(eq_at));
    const std::size_t value_len = bytes[eq_at + 1];
    const std::size_t value_at = eq_at + 2;
    if (value_at + value_len >= n || bytes[value_at + value_len] != ';') continue;
    if (!std::all_of(bytes.begin() + static_cast<std::ptrdiff_t>(value_at),
                     bytes.begin() + static_cast<std::ptrdiff_t>(value_at + value_len), printable)) {
      continue;
    }
    std::string value(bytes.begin() + static_cast<std::ptrdiff_t>(value_at),
                      bytes.begin() + static_cast<std::ptrdiff_t>(value_at + value_len));

    // Router options follow the address blocks, so the last match wins.
    if (key == "caps") {
      out.caps = std::move(value);
    } else if (key == "router.version") {
      out.version = std::move(value);
    } else if (key == "netdb.knownRouters") {
      out.known_routers = parse_count(value);
    } else if (key == "netdb.knownLeaseSets") {
      out.known_leasesets = parse_count(value);
    } else if (key == "host" && !value.empty()) {
      out.direct_address_hint = true;
    } else if (is_indexed_key(key, "ih") || is_indexed_key(key, "itag")) {
      out.introducer_hint = true;
    }
  }

  static constexpr std::array<std::string_view, 4> kStyles{"NTCP2", "SSU2", "NTCP", "SSU"};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (const auto style : kStyles) {
      if (bytes[i] != style.size() || i + 1 + style.size() > n) continue;
      if (std::equal(style.begin(), style.end(), bytes.begin() + static_cast<std::ptrdiff_t>(i + 1))) {
        out.address_styles.emplace_back(style);
      }
    }
  }
  return out;
}

}  // namespace shadescope::netdb
