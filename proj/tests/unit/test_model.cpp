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

#include <random>
#include <set>

#include "doctest.h"

#include "model/capabilities.hpp"
#include "model/date.hpp"
#include "model/destination.hpp"
#include "model/encoding.hpp"
#include "model/errors.hpp"
#include "model/hash.hpp"
#include "model/shade.hpp"
#include "oracle/sha256_ref.hpp"
#include "oracle/text_ref.hpp"
#include "support/records.hpp"

using namespace shadescope;

namespace {

std::vector<std::uint8_t> filled_identity(std::uint8_t fill, std::uint8_t cert_type, std::uint16_t cert_len) {
  std::vector<std::uint8_t> bytes(384, fill);
  bytes.push_back(cert_type);
  bytes.push_back(static_cast<std::uint8_t>(cert_len >> 8));
  bytes.push_back(static_cast<std::uint8_t>(cert_len & 0xff));
  for (std::uint16_t i = 0; i < cert_len; ++i) bytes.push_back(fill);
  return bytes;
}

}  // namespace

TEST_SUITE("encoding") {
  TEST_CASE("sha256 agrees with the reference implementation and frozen digests") {
    CHECK(sha256("abc").to_hex() == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256("").to_hex() == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256("20250101").to_hex() == "15ccdd9f6056a69f2eab97206923d1d8027d8af36c7febf694b928b1d82b70f3");
    const std::vector<std::uint8_t> all41(391, 0x41);
    CHECK(sha256(all41).to_hex() == "0cc02ba81a91fbf84fea7851fd8672ef97dca4001aee38bf141c3262eab7cdef");

    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
      const auto msg = testsupport::random_bytes(rng, rng() % 300);
      CHECK(sha256(msg).to_hex() == oracle::hex(oracle::sha256(msg)));
    }
  }

  TEST_CASE("overlay base64 round-trips every 32-byte value") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
      const auto bytes = testsupport::random_bytes(rng, 32);
      const auto text = base64_encode(bytes);
      CHECK(text.size() == 44);
      CHECK(text.back() == '=');
      CHECK(text == oracle::base64_overlay(bytes));
      CHECK(text.find('+') == std::string::npos);
      CHECK(text.find('/') == std::string::npos);
      CHECK(base64_decode(text) == bytes);
      CHECK(base64_decode(std::string_view(text).substr(0, 43)) == bytes);
    }
  }

  TEST_CASE("base64 decode rejects foreign characters and stray bits") {
    CHECK_THROWS_AS(base64_decode("ab+d"), EncodingError);
    CHECK_THROWS_AS(base64_decode("ab/d"), EncodingError);
    CHECK_THROWS_AS(base64_decode("A"), EncodingError);
    CHECK_THROWS_AS(base64_decode("AB=="), EncodingError);  // nonzero trailing bits
    CHECK(base64_decode("AA==") == std::vector<std::uint8_t>{0});
    CHECK(base64_decode("").empty());
  }

  TEST_CASE("base32 matches the bitwise reference and folds case on decode") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
      const auto bytes = testsupport::random_bytes(rng, 1 + rng() % 40);
      const auto text = base32_encode(bytes);
      CHECK(text == oracle::base32_lower(bytes));
      CHECK(base32_decode(text) == bytes);
      std::string upper = text;
      for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      CHECK(base32_decode(upper) == bytes);
    }
    CHECK_THROWS_AS(base32_decode("a1"), EncodingError);
  }

  TEST_CASE("hex round trip") {
    const std::vector<std::uint8_t> v = {0x00, 0xab, 0xff};
    CHECK(hex_encode(v) == "00abff");
    CHECK(hex_decode("00ABff") == v);
    CHECK_THROWS_AS(hex_decode("abc"), EncodingError);
    CHECK_THROWS_AS(hex_decode("zz"), EncodingError);
  }
}

TEST_SUITE("hash") {
  TEST_CASE("Hash256 text forms") {
    const auto h = sha256("x");
    CHECK(Hash256::from_base64(h.to_base64()) == h);
    CHECK(Hash256::from_hex(h.to_hex()) == h);
    CHECK_THROWS_AS(Hash256::from_base64("AAAA"), EncodingError);
    CHECK_THROWS_AS(Hash256::from_bytes(std::vector<std::uint8_t>(31)), EncodingError);
    CHECK(Hash256{}.is_zero());
    CHECK((h ^ h).is_zero());
  }
}

TEST_SUITE("destination") {
  TEST_CASE("null certificate gives d_s = 387") {
    const auto bytes = filled_identity(0x41, 0, 0);
    const auto d = Destination::parse(bytes);
    CHECK(d.size() == 387);
    CHECK(d.cert_type() == 0);
    CHECK(d.cert_length() == 0);
    CHECK(hash_identity(d).to_hex() == "db26b4fc1aaed5dbb90f1e9f306d43d537379862901a21c7d5dbebba53ab31e3");
  }

  TEST_CASE("type-5 key certificate gives d_s = 391") {
    const auto bytes = filled_identity(0x41, 5, 4);
    REQUIRE(bytes.size() == 391);
    const auto d = Destination::parse(bytes);
    CHECK(d.size() == 391);
    CHECK(d.cert_type() == 5);
    CHECK(d.cert_length() == 4);
    CHECK(hash_identity(d).to_hex() == "047b1fe9da65850fc7fd57188953609774801073b2689acf9e657fda9050d0da");
    CHECK(hash_identity(d).to_hex() == oracle::hex(oracle::sha256(bytes)));
  }

  TEST_CASE("trailing bytes beyond d_s never change the hash") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 100; ++i) {
      const auto d = testsupport::random_destination(rng);
      std::vector<std::uint8_t> extended(d.bytes().begin(), d.bytes().end());
      const auto base = hash_identity(extended);
      const auto tail = testsupport::random_bytes(rng, 1 + rng() % 64);
      extended.insert(extended.end(), tail.begin(), tail.end());
      CHECK(hash_identity(extended) == base);
      CHECK(Destination::parse(extended).size() == d.size());
      CHECK(d.size() == 387 + d.cert_length());
    }
  }

  TEST_CASE("short identities are parse errors naming the offset") {
    const std::vector<std::uint8_t> short_bytes(386, 0);
    try {
      (void)identity_length(short_bytes);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.kind() == ParseErrorKind::TruncatedIdentity);
    }
    auto declared = filled_identity(0, 5, 4);
    declared.resize(389);  // certificate payload cut short
    CHECK_THROWS_AS(Destination::parse(declared), ParseError);
  }
}

TEST_SUITE("capabilities") {
  TEST_CASE("parse_caps reference cases") {
    const auto xfr = parse_caps("XfR");
    CHECK(xfr.floodfill);
    CHECK_FALSE(xfr.hidden);
    CHECK_FALSE(xfr.firewalled);
    CHECK(xfr.bandwidth_class == 'X');

    const auto empty = parse_caps("");
    CHECK_FALSE(empty.floodfill);
    CHECK_FALSE(empty.hidden);
    CHECK_FALSE(empty.firewalled);
    CHECK_FALSE(empty.bandwidth_class.has_value());
    CHECK(empty.diagnostics.empty());

    const auto xr = parse_caps("XR");
    CHECK_FALSE(xr.floodfill);
    CHECK(xr.bandwidth_class == 'X');
  }

  TEST_CASE("unknown characters are diagnosed, not fatal") {
    const auto c = parse_caps("LUz!");
    CHECK(c.firewalled);
    CHECK(c.bandwidth_class == 'L');
    CHECK(c.diagnostics.size() >= 1);
  }

  TEST_CASE("several bandwidth letters resolve to the highest tier") {
    const auto c = parse_caps("PXfR");
    CHECK(c.bandwidth_class == 'X');
    CHECK_FALSE(c.diagnostics.empty());
  }

  TEST_CASE("high-capacity letters") {
    for (char c : std::string("NOPX")) CHECK(is_high_capacity(c));
    for (char c : std::string("KLMf")) CHECK_FALSE(is_high_capacity(c));
  }

  TEST_CASE("alpha needs host and port; iota reads introducer keys") {
    const auto id = testsupport::key_cert_destination(1);
    const auto bare = testsupport::make_record(id, "LR");
    CHECK_FALSE(has_direct_address(bare));
    CHECK_FALSE(has_introducers(bare));

    const auto direct = testsupport::make_record(id, "XR", {testsupport::direct_address("NTCP2", "1.2.3.4", 1234)});
    CHECK(has_direct_address(direct));

    const auto intro = testsupport::make_record(id, "LU", {testsupport::introducer_address()});
    CHECK_FALSE(has_direct_address(intro));
    CHECK(has_introducers(intro));

    TransportAddress host_only;
    host_only.style = "NTCP2";
    host_only.options = {{"host", "1.2.3.4"}};
    CHECK_FALSE(has_direct_address(testsupport::make_record(id, "LR", {host_only})));
  }

  TEST_CASE("absent profile guards its fields") {
    const auto p = CapabilityProfile::absent();
    CHECK_FALSE(p.delta());
    CHECK_THROWS_AS((void)p.capabilities(), ContractViolation);
  }

  TEST_CASE("from_record reads every classifier input") {
    const auto id = testsupport::key_cert_destination(2);
    const auto r = testsupport::make_record(id, "OfHU", {testsupport::direct_address("SSU2", "5.6.7.8", 9),
                                                         testsupport::introducer_address()});
    const auto p = CapabilityProfile::from_record(r);
    REQUIRE(p.delta());
    const auto& c = p.capabilities();
    CHECK(c.kappa_f);
    CHECK(c.kappa_H);
    CHECK(c.kappa_U);
    CHECK(c.bandwidth_class == 'O');
    CHECK(c.alpha);
    CHECK(c.iota);
  }
}

TEST_SUITE("shade") {
  TEST_CASE("level, name and layer form a bijection") {
    const char* names[] = {"Beacon", "Relay", "Passive", "Cloaked", "Veiled", "Declared", "Phantom", "Exclusive"};
    std::set<std::string_view> seen;
    for (int level = 1; level <= 8; ++level) {
      const auto s = Shade::from_level(level);
      CHECK(s.level() == level);
      CHECK(s.name() == names[level - 1]);
      CHECK(Shade::from_name(names[level - 1]) == s);
      CHECK(s.layer() == (level == 8 ? 2 : 1));
      CHECK_FALSE(s.role().empty());
      seen.insert(s.name());
    }
    CHECK(seen.size() == 8);
    CHECK(Shade::exclusive().role() == "Stealth C2");
    CHECK(Shade::beacon().role() == "NetDB anchor");
    CHECK_THROWS_AS(Shade::from_level(0), std::out_of_range);
    CHECK_THROWS_AS(Shade::from_level(9), std::out_of_range);
    CHECK_THROWS_AS(Shade::from_name("beacon"), std::invalid_argument);
  }
}

TEST_SUITE("date") {
  TEST_CASE("yyyyMMdd parsing") {
    const auto d = UtcDate::parse("20250615");
    CHECK(d.to_string() == "20250615");
    CHECK(d.next().to_string() == "20250616");
    CHECK(UtcDate::parse("20241231").next().to_string() == "20250101");
    CHECK(UtcDate::parse("20240228").next().to_string() == "20240229");
    CHECK_THROWS_AS(UtcDate::parse("20250230"), EncodingError);
    CHECK_THROWS_AS(UtcDate::parse("2025-01-01"), EncodingError);
    CHECK_THROWS_AS(UtcDate::parse("2025011"), EncodingError);
    CHECK(UtcDate::today().to_string().size() == 8);
  }
}
