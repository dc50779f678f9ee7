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

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"

#include "dht/keys.hpp"
#include "model/errors.hpp"
#include "oracle/assoc_ref.hpp"
#include "oracle/sha256_ref.hpp"
#include "oracle/text_ref.hpp"
#include "support/records.hpp"

using namespace shadescope;
using namespace shadescope::dht;

namespace {

Hash256 random_hash(std::mt19937_64& rng) {
  Hash256 h;
  for (auto& b : h.bytes()) b = static_cast<std::uint8_t>(rng());
  return h;
}

oracle::Bytes32 raw(const Hash256& h) { return h.bytes(); }

Hash256 with_first_byte(std::uint8_t b) {
  Hash256 h;
  h.bytes()[0] = b;
  return h;
}

}  // namespace

TEST_SUITE("routing keys") {
  TEST_CASE("daily modifier is the hash of the date string") {
    const auto d = UtcDate::parse("20250101");
    CHECK(daily_mod_key(d).to_hex() == "15ccdd9f6056a69f2eab97206923d1d8027d8af36c7febf694b928b1d82b70f3");
    CHECK(daily_mod_key(d) == daily_mod_key(UtcDate::parse("20250101")));
    CHECK(daily_mod_key(UtcDate::parse("20250102")).to_hex() ==
          "4337ba8d3d047d13dce5fcbb643a07d985616ef93fbc2061ea2a58eafa777387");
    CHECK(daily_mod_key(d) != daily_mod_key(d.next()));
  }

  TEST_CASE("frozen routing keys") {
    const auto d = UtcDate::parse("20250101");
    CHECK(routing_key(Hash256{}, d).key.to_hex() == "ceee9a60fe7cf91add6a2fe22df6c35e30d2eaad6c55997e19c2cd8d6455dedc");
    CHECK(routing_key(Hash256{}, d).key == sha256(daily_mod_key(d).span()));
    CHECK(routing_key(daily_mod_key(d), d).key.to_hex() ==
          "66687aadf862bd776c8fc18b8e9f8e20089714856ee233b3902a591d0d5f2925");

    Hash256 seq;
    for (int i = 0; i < 32; ++i) seq.bytes()[i] = static_cast<std::uint8_t>(i);
    const auto rk = routing_key(seq, UtcDate::parse("20250615"));
    CHECK(rk.key.to_hex() == "f3a6194b596ad38fc7a823ad5ae1bf9bb8525a6ff72944a7c92f76da0c79a676");
    CHECK(rk.date == UtcDate::parse("20250615"));
  }

  TEST_CASE("agreement with the reference hash on random inputs") {
    std::mt19937_64 rng(41);
    auto date = UtcDate::parse("20240101");
    for (int i = 0; i < 100; ++i) {
      const auto h = random_hash(rng);
      const auto got = routing_key(h, date).key;
      CHECK(got.bytes() == oracle::routing_key(raw(h), date.to_string()));
      CHECK(routing_key(h, daily_mod_key(date)) == got);
      date = date.next();
    }
  }

  TEST_CASE("thirty consecutive dates give thirty distinct keys") {
    std::mt19937_64 rng(4);
    const auto h = random_hash(rng);
    std::set<Hash256> keys;
    auto date = UtcDate::parse("20250220");
    for (int i = 0; i < 30; ++i, date = date.next()) keys.insert(routing_key(h, date).key);
    CHECK(keys.size() == 30);
  }
}

TEST_SUITE("xor distance") {
  TEST_CASE("basic values") {
    std::mt19937_64 rng(6);
    const auto a = random_hash(rng);
    const auto b = random_hash(rng);
    CHECK(xor_distance(a, a).is_zero());
    CHECK(xor_distance(a, b) == xor_distance(b, a));
    Hash256 ones;
    ones.bytes().fill(0xff);
    CHECK(xor_distance(Hash256{}, ones).to_hex() == std::string(64, 'f'));
    CHECK(xor_distance(with_first_byte(0x01), Hash256{}) < xor_distance(with_first_byte(0x81), Hash256{}));
  }

  TEST_CASE("ordering is big-endian") {
    Hash256 low;
    low.bytes()[31] = 0xff;
    Hash256 high;
    high.bytes()[0] = 0x01;
    CHECK(XorDistance(low) < XorDistance(high));
  }
}

TEST_SUITE("responsibility") {
  TEST_CASE("analytic cases") {
    const auto a = Hash256{};
    const auto b = with_first_byte(0x80);
    const std::vector<RouterHash> set = {b, a};
    CHECK(closest_to_key(with_first_byte(0x01), set) == a);
    const std::vector<RouterHash> single = {b};
    CHECK(responsible_floodfill(sha256("x"), UtcDate::parse("20250101"), single) == b);
    CHECK_THROWS_AS(closest_to_key(a, std::vector<RouterHash>{}), std::invalid_argument);
  }

  TEST_CASE("equal distances go to the smaller hash") {
    const std::vector<RouterHash> dup = {with_first_byte(0x42), with_first_byte(0x42)};
    CHECK(closest_to_key(Hash256{}, dup) == with_first_byte(0x42));
  }

  TEST_CASE("argmin equals exhaustive scan and ignores order") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<RouterHash> ff;
      std::vector<oracle::Bytes32> ref;
      for (int i = 0; i < 64; ++i) {
        ff.push_back(random_hash(rng));
        ref.push_back(raw(ff.back()));
      }
      const auto d = random_hash(rng);
      const auto date = UtcDate::parse("20250301");
      const auto got = responsible_floodfill(d, date, ff);
      CHECK(got.bytes() == oracle::nearest(oracle::routing_key(raw(d), "20250301"), ref));
      std::shuffle(ff.begin(), ff.end(), rng);
      CHECK(responsible_floodfill(d, date, ff) == got);

      const auto near = nearest_floodfills(routing_key(d, date).key, ff, 4);
      REQUIRE(near.size() == 4);
      CHECK(near[0] == got);
      for (std::size_t i = 1; i < near.size(); ++i) {
        CHECK(xor_distance(near[i - 1], routing_key(d, date).key) <= xor_distance(near[i], routing_key(d, date).key));
      }
    }
    std::vector<RouterHash> three = {sha256("a"), sha256("b"), sha256("c")};
    CHECK(nearest_floodfills(Hash256{}, three, 10).size() == 3);
  }
}

TEST_SUITE("association") {
  TEST_CASE("trivial cases") {
    const auto t = sha256("target");
    const auto date = UtcDate::parse("20250101");
    const std::vector<RouterHash> only_t = {t};
    CHECK(xor_association(t, std::vector<std::string>{}, only_t, date).eepsites.empty());
    const std::vector<std::string> sites = {b32_from_hash(sha256("a")), b32_from_hash(sha256("b"))};
    CHECK(xor_association(t, sites, only_t, date).eepsites == sites);
  }

  TEST_CASE("undecodable entries are skipped with a warning") {
    const auto t = sha256("target");
    const std::vector<RouterHash> ff = {t};
    const std::vector<std::string> sites = {"nope.b32.i2p", b32_from_hash(sha256("a"))};
    const auto r = xor_association(t, sites, ff, UtcDate::parse("20250101"));
    CHECK(r.eepsites.size() == 1);
    CHECK(r.warnings.size() == 1);
  }

  TEST_CASE("matches the brute-force oracle including planted ties") {
    std::mt19937_64 rng(99);
    const std::string date = "20250615";
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t nf = 1 + rng() % 64;
      const std::size_t ns = rng() % 33;
      std::vector<RouterHash> ff;
      for (std::size_t i = 0; i < nf; ++i) ff.push_back(random_hash(rng));
      const bool target_inside = rng() % 2 == 0;
      const auto target = target_inside ? ff[rng() % nf] : random_hash(rng);
      std::vector<std::string> sites;
      std::vector<oracle::Bytes32> site_hashes;
      for (std::size_t i = 0; i < ns; ++i) {
        const auto h = random_hash(rng);
        sites.push_back(b32_from_hash(h));
        site_hashes.push_back(raw(h));
      }
      // Duplicate of the target in the floodfill list: an exact tie that must not disqualify.
      if (trial % 5 == 0) ff.push_back(target);

      std::vector<oracle::Bytes32> ff_raw;
      for (const auto& f : ff) ff_raw.push_back(raw(f));
      const auto want_idx = oracle::associated_sites(raw(target), site_hashes, ff_raw, date);
      std::vector<std::string> want;
      for (auto i : want_idx) want.push_back(sites[i]);
      const auto got = xor_association(target, sites, ff, UtcDate::parse(date));
      CHECK(got.eepsites == want);
      CHECK(got.warnings.empty());

      // Agreement with single-argmin responsibility over F plus the target.
      auto with_t = ff;
      with_t.push_back(target);
      for (std::size_t i = 0; i < ns; ++i) {
        const bool assoc = std::find(want_idx.begin(), want_idx.end(), i) != want_idx.end();
        const auto owner = responsible_floodfill(Hash256(site_hashes[i]), UtcDate::parse(date), with_t);
        CHECK(assoc == (owner == target));
      }
    }
  }

  TEST_CASE("association table rows explain the verdict") {
    std::mt19937_64 rng(3);
    std::vector<RouterHash> ff;
    for (int i = 0; i < 8; ++i) ff.push_back(random_hash(rng));
    const auto target = ff[0];
    std::vector<std::string> sites;
    for (int i = 0; i < 16; ++i) sites.push_back(b32_from_hash(random_hash(rng)));
    const auto date = UtcDate::parse("20250101");
    const auto rows = association_table(target, sites, ff, date);
    const auto assoc = xor_association(target, sites, ff, date);
    REQUIRE(rows.size() == sites.size());
    std::vector<std::string> from_rows;
    for (const auto& row : rows) {
      CHECK(row.routing_key == routing_key(row.destination, date).key);
      CHECK(row.target_distance == xor_distance(target, row.routing_key));
      REQUIRE(row.nearest_other.has_value());
      CHECK(row.associated == !(*row.nearest_other_distance < row.target_distance));
      if (row.associated) from_rows.push_back(row.b32);
    }
    CHECK(from_rows == assoc.eepsites);
  }
}

TEST_SUITE("b32") {
  TEST_CASE("derivation matches the reference encoder") {
    std::vector<std::uint8_t> bytes(384, 0x41);
    bytes.insert(bytes.end(), {5, 0, 4, 0x41, 0x41, 0x41, 0x41});
    const auto dest = Destination::parse(bytes);
    CHECK(dest.size() == 391);
    const auto addr = derive_b32(dest);
    CHECK(addr == "ar5r72o2mwcq7r75k4misu3as52iaedtwjujvt46mv75vecq2dna.b32.i2p");
    const auto digest = oracle::sha256(bytes);
    CHECK(addr == oracle::base32_lower({digest.begin(), digest.end()}) + ".b32.i2p");

    std::vector<std::uint8_t> null_cert(384, 0x41);
    null_cert.insert(null_cert.end(), {0, 0, 0});
    CHECK(derive_b32(Destination::parse(null_cert)) ==
          "3mtlj7a2v3k5xoipd2pta3kd2u3tpgdcsancdr6v3pv3uu5lghrq.b32.i2p");
  }

  TEST_CASE("random destinations") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
      const auto d = testsupport::random_destination(rng);
      const auto addr = derive_b32(d);
      REQUIRE(addr.size() == kB32Chars + kB32Suffix.size());
      const std::vector<std::uint8_t> prefix(d.bytes().begin(), d.bytes().end());
      const auto digest = oracle::sha256(prefix);
      CHECK(addr.substr(0, kB32Chars) == oracle::base32_lower({digest.begin(), digest.end()}));
      CHECK(decode_b32(addr) == hash_identity(d));
    }
  }

  TEST_CASE("decode accepts case and optional suffix, rejects bad input") {
    const auto h = sha256("dest");
    const auto addr = b32_from_hash(h);
    CHECK(decode_b32(addr) == h);
    CHECK(decode_b32(addr.substr(0, kB32Chars)) == h);
    std::string upper = addr;
    for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    CHECK(decode_b32(upper) == h);
    CHECK_THROWS_AS(decode_b32(addr.substr(0, 51)), EncodingError);
    CHECK_THROWS_AS(decode_b32(std::string(52, '1')), EncodingError);
  }
}
