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

#include "netsim/network.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>

#include "dht/keys.hpp"
#include "model/errors.hpp"

namespace shadescope::netsim {

namespace {

constexpr double kSumTolerance = 1e-9;

// Uniform draws built directly on raw mt19937_64 output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool chance(std::uint64_t one_in) { return engine_() % one_in == 0; }

  void fill(std::span<std::uint8_t> out) {
    std::size_t i = 0;
    while (i < out.size()) {
      std::uint64_t v = engine_();
      for (int b = 0; b < 8 && i < out.size(); ++b, v >>= 8) out[i++] = static_cast<std::uint8_t>(v);
    }
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

char pick(Rng& rng, std::string_view letters) { return letters[rng.below(letters.size())]; }

std::string random_host(Rng& rng) {
  return std::to_string(1 + rng.below(223)) + '.' + std::to_string(rng.below(256)) + '.' +
         std::to_string(rng.below(256)) + '.' + std::to_string(1 + rng.below(254));
}

TransportAddress direct_address(Rng& rng, std::uint64_t expiration_ms) {
  TransportAddress a;
  a.cost = 3;
  a.expiration_ms = expiration_ms;
  a.style = "NTCP2";
  a.options = {{"host", random_host(rng)}, {"port", std::to_string(9000 + rng.below(22000))}, {"v", "2"}};
  return a;
}

TransportAddress introducer_address(Rng& rng, std::uint64_t expiration_ms) {
  Hash256::Bytes ih{};
  rng.fill(ih);
  TransportAddress a;
  a.cost = 10;
  a.expiration_ms = expiration_ms;
  a.style = "SSU2";
  a.options = {{"caps", "4"},
               {"ih0", Hash256{ih}.to_base64()},
               {"itag0", std::to_string(1 + rng.below(0xfffffffe))},
               {"iexp0", std::to_string(expiration_ms / 1000)},
               {"v", "2"}};
  return a;
}

TransportAddress unreachable_address(std::uint64_t expiration_ms) {
  TransportAddress a;
  a.cost = 14;
  a.expiration_ms = expiration_ms;
  a.style = "SSU2";
  a.options = {{"caps", "4"}, {"v", "2"}};
  return a;
}

// Caps string and addresses realising the given shade under the classifier.
void dress_record(Rng& rng, int level, RouterInfo& record) {
  constexpr std::string_view kHigh = "NOPX";
  constexpr std::string_view kLow = "KLM";
  constexpr std::string_view kAny = "KLMNOPX";
  const std::uint64_t exp = 0;
  std::string caps;
  switch (level) {
    case 1:
      caps = std::string(1, pick(rng, kHigh)) + "fR";
      record.addresses.push_back(direct_address(rng, exp));
      record.options["netdb.knownLeaseSets"] = std::to_string(50 + rng.below(500));
      record.options["netdb.knownRouters"] = std::to_string(2000 + rng.below(8000));
      break;
    case 2:
      caps = std::string(1, pick(rng, kHigh)) + "R";
      record.addresses.push_back(direct_address(rng, exp));
      break;
    case 3:
      caps = rng.chance(4) ? std::string("R") : std::string(1, pick(rng, kLow)) + "R";
      record.addresses.push_back(direct_address(rng, exp));
      break;
    case 4:
      caps = std::string(1, pick(rng, kAny)) + "U";
      record.addresses.push_back(direct_address(rng, exp));
      break;
    case 5:
      caps = std::string(1, pick(rng, kAny)) + "U";
      record.addresses.push_back(introducer_address(rng, exp));
      break;
    case 6:
      caps = std::string(1, pick(rng, kAny)) + "H";
      if (rng.chance(2)) record.addresses.push_back(unreachable_address(exp));
      break;
    case 7:
      caps = std::string(1, pick(rng, kAny)) + "U";
      break;
    default: throw std::logic_error("dress_record: shade " + std::to_string(level) + " has no record");
  }
  record.options["caps"] = caps;
  record.options["netId"] = "2";
  record.options["router.version"] = "0.9.65";
}

Destination random_identity(Rng& rng) {
  std::array<std::uint8_t, Destination::kKeyMaterialSize> keys{};
  rng.fill(keys);
  // key certificate: signing type 7 (EdDSA), crypto type 4 (X25519)
  constexpr std::array<std::uint8_t, 4> kKeyCert{0x00, 0x07, 0x00, 0x04};
  return Destination::build(keys, 5, kKeyCert);
}

struct Words {
  std::array<std::uint64_t, 4> w{};

  static Words of(const Hash256& h) {
    Words out;
    for (std::size_t i = 0; i < 4; ++i) {
      std::uint64_t v = 0;
      for (std::size_t b = 0; b < 8; ++b) v = (v << 8) | h[i * 8 + b];
      out.w[i] = v;
    }
    return out;
  }
  friend auto operator<=>(const Words&, const Words&) = default;
};

Words xor_words(const Words& a, const Words& b) {
  Words out;
  for (std::size_t i = 0; i < 4; ++i) out.w[i] = a.w[i] ^ b.w[i];
  return out;
}

double get_fraction(const nlohmann::json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) throw InfeasibleSpec(std::string(key) + " must be a number");
  return j.at(key).get<double>();
}

}  // namespace

NetworkSpec parse_network_spec(const nlohmann::json& j) {
  if (!j.is_object()) throw InfeasibleSpec("network spec must be a JSON object");
  NetworkSpec spec;
  try {
    spec.n_routers = j.at("n_routers").get<std::size_t>();
    spec.floodfill_fraction = get_fraction(j, "floodfill_fraction", 0.0);
    if (j.contains("k")) spec.k = j.at("k").get<std::size_t>();
    if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("date")) spec.date = UtcDate::parse(j.at("date").get<std::string>());
    const auto& dist = j.at("shade_distribution");
    if (!dist.is_object()) throw InfeasibleSpec("shade_distribution must be an object keyed \"1\"..\"8\"");
    for (const auto& [key, value] : dist.items()) {
      int level = 0;
      try {
        level = std::stoi(key);
      } catch (const std::exception&) {
        level = 0;
      }
      if (level < 1 || level > 8 || std::to_string(level) != key) {
        throw InfeasibleSpec("shade_distribution key \"" + key + "\" is not a shade level 1..8");
      }
      spec.shade_distribution[static_cast<std::size_t>(level - 1)] = value.get<double>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw InfeasibleSpec(std::string("network spec: ") + e.what());
  } catch (const EncodingError& e) {
    throw InfeasibleSpec(std::string("network spec date: ") + e.what());
  }
  validate(spec);
  return spec;
}

NetworkSpec load_network_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InfeasibleSpec("cannot open network spec " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InfeasibleSpec("network spec " + path.string() + ": " + e.what());
  }
  return parse_network_spec(j);
}

nlohmann::json network_spec_to_json(const NetworkSpec& spec) {
  nlohmann::json dist = nlohmann::json::object();
  for (std::size_t i = 0; i < 8; ++i) dist[std::to_string(i + 1)] = spec.shade_distribution[i];
  return {{"n_routers", spec.n_routers},
          {"floodfill_fraction", spec.floodfill_fraction},
          {"shade_distribution", dist},
          {"k", spec.k},
          {"seed", spec.seed},
          {"date", spec.date.to_string()}};
}

std::array<std::size_t, 8> shade_counts(const NetworkSpec& spec) {
  std::array<std::size_t, 8> counts{};
  std::array<double, 8> remainder{};
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    const double quota = spec.shade_distribution[i] * static_cast<double>(spec.n_routers);
    counts[i] = static_cast<std::size_t>(std::floor(quota + 1e-9));
    remainder[i] = quota - static_cast<double>(counts[i]);
    assigned += counts[i];
  }
  std::array<std::size_t, 8> order{};
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t i = 0; assigned < spec.n_routers; i = (i + 1) % 8) {
    if (spec.shade_distribution[order[i]] <= 0.0) continue;
    ++counts[order[i]];
    ++assigned;
  }
  while (assigned > spec.n_routers) {
    // Only reachable through rounding slack; take from the largest bucket.
    auto it = std::max_element(counts.begin(), counts.end());
    --*it;
    --assigned;
  }
  return counts;
}

void validate(const NetworkSpec& spec) {
  if (spec.n_routers == 0) throw InfeasibleSpec("n_routers must be positive");
  if (!(spec.floodfill_fraction >= 0.0 && spec.floodfill_fraction <= 1.0)) {
    throw InfeasibleSpec("floodfill_fraction must lie in [0, 1]");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < 8; ++i) {
    const double d = spec.shade_distribution[i];
    if (!(d >= 0.0 && d <= 1.0)) {
      throw InfeasibleSpec("shade_distribution[" + std::to_string(i + 1) + "] must lie in [0, 1]");
    }
    sum += d;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw InfeasibleSpec("shade_distribution sums to " + std::to_string(sum) + ", expected 1");
  }
  if (spec.k == 0) throw InfeasibleSpec("replication k must be at least 1");

  const auto counts = shade_counts(spec);
  const double wanted = spec.floodfill_fraction * static_cast<double>(spec.n_routers);
  if (wanted > 0.0 && counts[0] == 0) {
    throw InfeasibleSpec("floodfills requested but the distribution has no shade-1 mass");
  }
  if (std::abs(static_cast<double>(counts[0]) - wanted) >= 1.0) {
    throw InfeasibleSpec("floodfill_fraction " + std::to_string(spec.floodfill_fraction) + " implies " +
                         std::to_string(wanted) + " floodfills but shade 1 holds " + std::to_string(counts[0]) +
                         " routers; floodfills are exactly the shade-1 routers");
  }
  const std::size_t published = spec.n_routers - counts[7];
  if (published > 0 && counts[0] == 0) {
    throw InfeasibleSpec("published records need at least one floodfill to be stored on");
  }
}

std::optional<std::size_t> NetworkModel::find(const RouterHash& hash) const {
  const auto it = index.find(hash);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> NetworkModel::floodfill_position(const RouterHash& hash) const {
  const auto it = floodfill_index.find(hash);
  if (it == floodfill_index.end()) return std::nullopt;
  return it->second;
}

std::vector<RouterHash> NetworkModel::floodfill_hashes() const {
  std::vector<RouterHash> out;
  out.reserve(floodfills.size());
  for (const auto i : floodfills) out.push_back(routers[i].hash);
  return out;
}

std::vector<RouterInfo> NetworkModel::published_records() const {
  std::vector<RouterInfo> out;
  out.reserve(published.size());
  for (const auto i : published) out.push_back(*routers[i].record);
  return out;
}

std::vector<std::size_t> NetworkModel::routers_with_shade(int level) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < routers.size(); ++i) {
    if (routers[i].shade.level() == level) out.push_back(i);
  }
  return out;
}

NetworkModel generate_network(const NetworkSpec& spec) {
  validate(spec);
  Rng rng(spec.seed);

  const auto counts = shade_counts(spec);
  std::vector<int> levels;
  levels.reserve(spec.n_routers);
  for (std::size_t i = 0; i < 8; ++i) levels.insert(levels.end(), counts[i], static_cast<int>(i) + 1);
  rng.shuffle(levels);

  const auto midnight = std::chrono::sys_days{spec.date.ymd()};
  const auto published_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(midnight.time_since_epoch()).count());

  NetworkModel model;
  model.spec = spec;
  model.routers.reserve(spec.n_routers);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const int level = levels[i];
    Destination identity = random_identity(rng);
    SimRouter router;
    router.hash = hash_identity(identity);
    router.shade = Shade::from_level(level);
    if (level != 8) {
      RouterInfo record{
          .hash = router.hash, .identity = std::move(identity), .published_ms = 0, .addresses = {}, .options = {}, .signature = {}};
      record.published_ms = published_ms + rng.below(3'600'000);
      dress_record(rng, level, record);
      record.signature.resize(64);
      rng.fill(record.signature);
      router.profile = CapabilityProfile::from_record(record);
      router.record = std::move(record);
      model.published.push_back(i);
      if (level == 1) {
        model.floodfill_index.emplace(router.hash, model.floodfills.size());
        model.floodfills.push_back(i);
      }
    } else {
      model.exclusive.push_back(i);
    }
    if (!model.index.emplace(router.hash, i).second) throw std::logic_error("router hash collision");
    model.routers.push_back(std::move(router));
  }

  model.knowledge.assign(model.floodfills.size(), {});
  model.stored_on.assign(model.routers.size(), {});
  if (model.floodfills.empty()) return model;

  std::vector<Words> ff_words;
  ff_words.reserve(model.floodfills.size());
  for (const auto i : model.floodfills) ff_words.push_back(Words::of(model.routers[i].hash));

  const Hash256 modifier = dht::daily_mod_key(spec.date);
  const std::size_t k = std::min(spec.k, model.floodfills.size());
  struct Candidate {
    Words distance;
    Words hash;
    std::size_t pos;
    bool operator<(const Candidate& o) const {
      return distance != o.distance ? distance < o.distance : hash < o.hash;
    }
  };
  std::vector<Candidate> best;
  best.reserve(k + 1);
  for (const auto r : model.published) {
    const Words key = Words::of(dht::routing_key(model.routers[r].hash, modifier));
    best.clear();
    for (std::size_t pos = 0; pos < ff_words.size(); ++pos) {
      Candidate c{xor_words(ff_words[pos], key), ff_words[pos], pos};
      if (best.size() == k && !(c < best.back())) continue;
      best.insert(std::upper_bound(best.begin(), best.end(), c), c);
      if (best.size() > k) best.pop_back();
    }
    for (const auto& c : best) {
      model.knowledge[c.pos].push_back(r);
      model.stored_on[r].push_back(c.pos);
    }
  }
  return model;
}

VisibilityMetrics completeness_metrics(const NetworkModel& model) {
  VisibilityMetrics m;
  m.total = model.routers.size();
  m.published = model.published.size();
  m.exclusive = model.exclusive.size();
  if (m.total > 0) {
    m.rho = static_cast<double>(m.published) / static_cast<double>(m.total);
    m.xi = static_cast<double>(m.exclusive) / static_cast<double>(m.total);
  }
  return m;
}

}  // namespace shadescope::netsim
