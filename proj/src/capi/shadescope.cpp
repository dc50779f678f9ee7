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

#include "shadescope/shadescope.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <new>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "attribution/gateway_scan.hpp"
#include "attribution/protocol.hpp"
#include "attribution/source.hpp"
#include "classify/report.hpp"
#include "classify/shade_classifier.hpp"
#include "config/profiles.hpp"
#include "dht/keys.hpp"
#include "model/capabilities.hpp"
#include "model/destination.hpp"
#include "model/errors.hpp"
#include "model/hash.hpp"
#include "model/shade.hpp"
#include "netdb/leaseset_io.hpp"
#include "netdb/snapshot.hpp"
#include "netsim/experiment.hpp"
#include "netsim/network.hpp"

namespace ss = shadescope;
using nlohmann::json;

struct ss_snapshot {
  ss::netdb::NetDbSnapshot snapshot;
};

struct ss_leasesets {
  ss::netdb::LeaseSetFile file;
};

struct ss_network {
  ss::netsim::NetworkModel model;
};

struct ss_report {
  ss::classify::ShadeReport report;
};

struct ss_curves {
  std::vector<ss::netsim::HitCurve> curves;
};

namespace {

thread_local std::string g_last_error;

class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ss_status fail(ss_status status, const char* what) {
  g_last_error = what;
  return status;
}

template <typename F>
ss_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return SS_OK;
  } catch (const ss::netsim::InfeasibleSpec& e) {
    return fail(SS_ERR_INFEASIBLE, e.what());
  } catch (const ss::ParseError& e) {
    return fail(SS_ERR_PARSE, e.what());
  } catch (const ss::EncodingError& e) {
    return fail(SS_ERR_PARSE, e.what());
  } catch (const json::exception& e) {
    return fail(SS_ERR_PARSE, e.what());
  } catch (const ss::ContractViolation& e) {
    return fail(SS_ERR_CONTRACT, e.what());
  } catch (const ss::IoError& e) {
    return fail(SS_ERR_IO, e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(SS_ERR_IO, e.what());
  } catch (const NotFound& e) {
    return fail(SS_ERR_NOT_FOUND, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SS_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(SS_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SS_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

ss::Hash256 hash_in(const uint8_t* bytes) {
  require(bytes != nullptr, "hash pointer is null");
  return ss::Hash256::from_bytes(std::span<const std::uint8_t>(bytes, 32));
}

void hash_out(const ss::Hash256& h, uint8_t* out) { std::memcpy(out, h.span().data(), 32); }

ss::UtcDate date_in(const char* date) { return date == nullptr ? ss::UtcDate::today() : ss::UtcDate::parse(date); }

std::vector<ss::RouterHash> hashes_in(const uint8_t* bytes, size_t count) {
  require(count == 0 || bytes != nullptr, "hash array is null");
  std::vector<ss::RouterHash> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) out.push_back(hash_in(bytes + 32 * i));
  return out;
}

ss::Hash256 parse_hash_text(std::string_view text) {
  if (text.size() == 64) return ss::Hash256::from_hex(text);
  if (text.size() == 43 || text.size() == 44) return ss::Hash256::from_base64(text);
  if (text.size() >= ss::dht::kB32Chars) return ss::dht::decode_b32(text);
  throw ss::EncodingError("unrecognised hash \"" + std::string(text) +
                              "\" (expected base64, hex or a b32 address)");
}

ss::CapabilityProfile profile_in(const ss_profile& p) {
  if (!p.delta) return ss::CapabilityProfile::absent();
  ss::ObservedCapabilities caps;
  caps.kappa_f = p.kappa_f != 0;
  caps.kappa_H = p.kappa_H != 0;
  caps.kappa_U = p.kappa_U != 0;
  if (p.bandwidth_class != 0) {
    require(ss::kBandwidthClasses.find(p.bandwidth_class) != std::string_view::npos, "unknown bandwidth class");
    caps.bandwidth_class = p.bandwidth_class;
  }
  caps.alpha = p.alpha != 0;
  caps.iota = p.iota != 0;
  return ss::CapabilityProfile::observed(caps);
}

ss::attribution::ProbePlan plan_for(const std::vector<ss::RouterHash>& floodfills, const ss_probe_options& o) {
  ss::attribution::ProbePlan plan;
  plan.floodfills = floodfills;
  if (o.shuffle) {
    std::mt19937_64 rng(o.shuffle_seed);
    auto& v = plan.floodfills;
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<size_t>(rng() % i)]);
  }
  plan.batch_size = o.batch_size;
  if (o.max_probes >= 0) plan.max_probes = static_cast<size_t>(o.max_probes);
  plan.validate();
  return plan;
}

ss::netsim::SimulatedSourceOptions sim_options(const ss_probe_options& o) {
  ss::netsim::SimulatedSourceOptions s;
  s.local_has_published = o.local_has_published != 0;
  s.failure_rate = o.failure_rate;
  s.failure_seed = o.failure_seed;
  return s;
}

json curves_json(const std::vector<ss::netsim::HitCurve>& curves) {
  json out = json::array();
  for (const auto& c : curves) {
    json pts = json::array();
    for (const auto& p : c.points) pts.push_back({{"cumulative_probes", p.cumulative_probes}, {"hits", p.hits}});
    json first = nullptr;
    if (const auto f = c.first_hit_probes()) first = *f;
    out.push_back({{"target", c.target.to_base64()}, {"first_hit_probes", first}, {"points", pts}});
  }
  return out;
}

}  // namespace

extern "C" {

const char* ss_version(void) { return "1.0.0"; }

const char* ss_status_name(ss_status status) {
  switch (status) {
    case SS_OK: return "ok";
    case SS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SS_ERR_PARSE: return "parse error";
    case SS_ERR_IO: return "i/o error";
    case SS_ERR_INFEASIBLE: return "infeasible specification";
    case SS_ERR_NOT_FOUND: return "not found";
    case SS_ERR_CONTRACT: return "contract violation";
    case SS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ss_last_error(void) { return g_last_error.c_str(); }

void ss_string_free(char* s) { std::free(s); }

ss_status ss_hash_parse(const char* text, uint8_t out[32]) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    hash_out(parse_hash_text(text), out);
  });
}

ss_status ss_hash_to_base64(const uint8_t hash[32], char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = dup_string(hash_in(hash).to_base64());
  });
}

ss_status ss_destination_b32(const uint8_t* bytes, size_t len, char** out_address, size_t* out_identity_len) {
  return guarded([&] {
    require(bytes != nullptr && out_address != nullptr, "null argument");
    const auto dest = ss::Destination::parse(std::span<const std::uint8_t>(bytes, len));
    *out_address = dup_string(ss::dht::derive_b32(dest));
    if (out_identity_len != nullptr) *out_identity_len = dest.size();
  });
}

ss_status ss_b32_decode(const char* address, uint8_t out[32]) {
  return guarded([&] {
    require(address != nullptr && out != nullptr, "null argument");
    hash_out(ss::dht::decode_b32(address), out);
  });
}

ss_status ss_daily_mod_key(const char* date, uint8_t out[32]) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    hash_out(ss::dht::daily_mod_key(date_in(date)), out);
  });
}

ss_status ss_routing_key(const uint8_t hash[32], const char* date, uint8_t out[32]) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    hash_out(ss::dht::routing_key(hash_in(hash), date_in(date)).key, out);
  });
}

ss_status ss_responsible_floodfill(const uint8_t dest[32], const char* date, const uint8_t* floodfills, size_t count,
                                   uint8_t out[32]) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    const auto ff = hashes_in(floodfills, count);
    hash_out(ss::dht::responsible_floodfill(hash_in(dest), date_in(date), ff), out);
  });
}

ss_status ss_parse_caps(const char* caps, ss_profile* out) {
  return guarded([&] {
    require(caps != nullptr && out != nullptr, "null argument");
    const auto flags = ss::parse_caps(caps);
    *out = ss_profile{};
    out->delta = 1;
    out->kappa_f = flags.floodfill;
    out->kappa_H = flags.hidden;
    out->kappa_U = flags.firewalled;
    out->bandwidth_class = flags.bandwidth_class.value_or('\0');
  });
}

ss_status ss_classify(const ss_profile* profile, int* out_level) {
  return guarded([&] {
    require(profile != nullptr && out_level != nullptr, "null argument");
    *out_level = ss::classify::classify(profile_in(*profile)).level();
  });
}

const char* ss_shade_name(int level) {
  static const char* const names[] = {"Beacon", "Relay",   "Passive", "Cloaked",
                                      "Veiled", "Declared", "Phantom", "Exclusive"};
  if (level < ss::Shade::kMinLevel || level > ss::Shade::kMaxLevel) return nullptr;
  return names[level - 1];
}

int ss_shade_layer(int level) {
  if (level < ss::Shade::kMinLevel || level > ss::Shade::kMaxLevel) return 0;
  return level == ss::Shade::kMaxLevel ? 2 : 1;
}

ss_status ss_snapshot_load(const char* dir, ss_snapshot** out) {
  return guarded([&] {
    require(dir != nullptr && out != nullptr, "null argument");
    if (!std::filesystem::is_directory(dir)) throw ss::IoError(std::string("not a directory: ") + dir);
    auto handle = std::make_unique<ss_snapshot>();
    handle->snapshot = ss::netdb::load_netdb_dir(dir);
    *out = handle.release();
  });
}

void ss_snapshot_free(ss_snapshot* snapshot) { delete snapshot; }

ss_status ss_snapshot_get_stats(const ss_snapshot* snapshot, ss_snapshot_stats* out) {
  return guarded([&] {
    require(snapshot != nullptr && out != nullptr, "null argument");
    const auto& s = snapshot->snapshot;
    *out = ss_snapshot_stats{};
    out->total = s.stats.total;
    out->records = s.records.size();
    out->floodfill_count = s.stats.floodfill_count;
    out->parse_failures = s.stats.parse_failures;
    out->lenient_recovered = s.stats.lenient_recovered;
    for (const auto& [hash, record] : s.records) {
      const auto shade = ss::classify::classify(ss::CapabilityProfile::from_record(record));
      ++out->shade_histogram[shade.level() - 1];
    }
  });
}

ss_status ss_snapshot_to_json(const ss_snapshot* snapshot, char** out) {
  return guarded([&] {
    require(snapshot != nullptr && out != nullptr, "null argument");
    json j = ss::netdb::snapshot_to_json(snapshot->snapshot);
    if (j.contains("records")) {
      for (auto& r : j["records"]) {
        const auto* record = snapshot->snapshot.find(ss::RouterHash::from_base64(r.at("hash").get<std::string>()));
        if (record == nullptr) continue;
        const auto shade = ss::classify::classify(ss::CapabilityProfile::from_record(*record));
        r["shade"] = {{"level", shade.level()}, {"name", std::string(shade.name())}};
      }
    }
    *out = dup_string(j.dump(2));
  });
}

int ss_snapshot_contains(const ss_snapshot* snapshot, const uint8_t hash[32]) {
  if (snapshot == nullptr || hash == nullptr) return 0;
  return snapshot->snapshot.find(hash_in(hash)) != nullptr ? 1 : 0;
}

int ss_snapshot_is_floodfill(const ss_snapshot* snapshot, const uint8_t hash[32]) {
  if (snapshot == nullptr || hash == nullptr) return 0;
  const auto* record = snapshot->snapshot.find(hash_in(hash));
  return record != nullptr && ss::parse_caps(record->caps().value_or("")).floodfill ? 1 : 0;
}

ss_status ss_leasesets_load(const char* path, ss_leasesets** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    auto handle = std::make_unique<ss_leasesets>();
    handle->file = ss::netdb::load_leasesets(path);
    *out = handle.release();
  });
}

void ss_leasesets_free(ss_leasesets* leasesets) { delete leasesets; }

size_t ss_leasesets_count(const ss_leasesets* leasesets) {
  return leasesets == nullptr ? 0 : leasesets->file.leasesets.size();
}

ss_status ss_leasesets_warnings_json(const ss_leasesets* leasesets, char** out) {
  return guarded([&] {
    require(leasesets != nullptr && out != nullptr, "null argument");
    *out = dup_string(json(leasesets->file.warnings).dump());
  });
}

ss_status ss_gateway_scan(const ss_leasesets* leasesets, const char* target, char** out_json) {
  return guarded([&] {
    require(leasesets != nullptr && target != nullptr && out_json != nullptr, "null argument");
    const auto prefix = ss::attribution::HashPrefix::from_base64(target);
    const auto& ls = leasesets->file.leasesets;
    const auto matches = ss::attribution::gateway_scan(prefix, ls);
    json j = ss::attribution::gateway_matches_to_json(matches, ls);
    j["target"] = target;
    j["prefix_bits"] = prefix.bits();
    j["leasesets"] = ls.size();
    *out_json = dup_string(j.dump(2));
  });
}

ss_status ss_xor_association(const ss_snapshot* netdb, const ss_leasesets* leasesets, const uint8_t target[32],
                             const char* date, int include_table, char** out_json) {
  return guarded([&] {
    require(netdb != nullptr && leasesets != nullptr && out_json != nullptr, "null argument");
    const auto target_hash = hash_in(target);
    const auto day = date_in(date);
    const auto floodfills = netdb->snapshot.floodfills();
    if (floodfills.empty()) throw std::invalid_argument("the NetDB snapshot holds no floodfill records");

    std::vector<std::string> eepsites;
    eepsites.reserve(leasesets->file.leasesets.size());
    for (const auto& ls : leasesets->file.leasesets) {
      eepsites.push_back(ls.b32.value_or(ss::dht::b32_from_hash(ls.destination_hash)));
    }
    const auto result = ss::dht::xor_association(target_hash, eepsites, floodfills, day);
    const bool is_ff = std::find(floodfills.begin(), floodfills.end(), target_hash) != floodfills.end();

    json j;
    j["target"] = target_hash.to_base64();
    j["date"] = day.to_string();
    j["target_is_floodfill"] = is_ff;
    j["floodfill_count"] = floodfills.size();
    j["candidates"] = eepsites.size();
    j["associated"] = result.eepsites;
    j["warnings"] = result.warnings;
    if (include_table) {
      json rows = json::array();
      for (const auto& row : ss::dht::association_table(target_hash, eepsites, floodfills, day)) {
        json r;
        r["b32"] = row.b32;
        r["routing_key"] = row.routing_key.to_hex();
        r["target_distance"] = row.target_distance.to_hex();
        r["nearest_other"] = row.nearest_other ? json(row.nearest_other->to_base64()) : json(nullptr);
        r["nearest_other_distance"] =
            row.nearest_other_distance ? json(row.nearest_other_distance->to_hex()) : json(nullptr);
        r["associated"] = row.associated;
        rows.push_back(std::move(r));
      }
      j["table"] = std::move(rows);
    }
    *out_json = dup_string(j.dump(2));
  });
}

ss_status ss_network_generate(const char* spec_json, ss_network** out) {
  return guarded([&] {
    require(spec_json != nullptr && out != nullptr, "null argument");
    const auto spec = ss::netsim::parse_network_spec(json::parse(spec_json));
    auto handle = std::make_unique<ss_network>();
    handle->model = ss::netsim::generate_network(spec);
    *out = handle.release();
  });
}

ss_status ss_network_load(const char* spec_path, ss_network** out) {
  return guarded([&] {
    require(spec_path != nullptr && out != nullptr, "null argument");
    const auto spec = ss::netsim::load_network_spec(spec_path);
    auto handle = std::make_unique<ss_network>();
    handle->model = ss::netsim::generate_network(spec);
    *out = handle.release();
  });
}

void ss_network_free(ss_network* network) { delete network; }

ss_status ss_network_get_metrics(const ss_network* network, ss_metrics* out) {
  return guarded([&] {
    require(network != nullptr && out != nullptr, "null argument");
    const auto m = ss::netsim::completeness_metrics(network->model);
    *out = ss_metrics{m.total, m.published, m.exclusive, network->model.floodfills.size(), m.rho, m.xi};
  });
}

ss_status ss_network_pick(const ss_network* network, int shade_level, size_t ordinal, uint8_t out[32]) {
  return guarded([&] {
    require(network != nullptr && out != nullptr, "null argument");
    ss::Shade::from_level(shade_level);
    const auto ids = network->model.routers_with_shade(shade_level);
    if (ordinal >= ids.size()) {
      throw NotFound("the network has " + std::to_string(ids.size()) + " routers of shade " +
                     std::to_string(shade_level));
    }
    hash_out(network->model.routers[ids[ordinal]].hash, out);
  });
}

ss_status ss_network_write_netdb(const ss_network* network, const char* dir) {
  return guarded([&] {
    require(network != nullptr && dir != nullptr, "null argument");
    ss::netdb::write_netdb_dir(dir, network->model.published_records());
  });
}

void ss_probe_options_init(ss_probe_options* options) {
  if (options == nullptr) return;
  *options = ss_probe_options{};
  options->batch_size = 5;
  options->max_probes = -1;
}

ss_status ss_lookup(const ss_snapshot* local, const ss_network* remote, const uint8_t target[32],
                    const ss_probe_options* options, ss_report** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    require(local != nullptr || remote != nullptr, "lookup needs a local snapshot or a remote network");
    ss_probe_options opts;
    ss_probe_options_init(&opts);
    if (options != nullptr) opts = *options;
    const auto subject = hash_in(target);

    std::vector<ss::RouterHash> floodfills;
    if (remote != nullptr) {
      floodfills = remote->model.floodfill_hashes();
    } else if (local != nullptr) {
      floodfills = local->snapshot.floodfills();
    }
    const auto plan = plan_for(floodfills, opts);

    std::optional<ss::netsim::SimulatedSource> sim;
    if (remote != nullptr) sim.emplace(remote->model, sim_options(opts));
    ss::attribution::LayeredSource source(local != nullptr ? &local->snapshot : nullptr,
                                          sim ? &*sim : nullptr);
    auto handle = std::make_unique<ss_report>();
    handle->report = ss::attribution::classify_remote(subject, source, plan);
    *out = handle.release();
  });
}

void ss_report_free(ss_report* report) { delete report; }

ss_outcome ss_report_outcome(const ss_report* report) {
  if (report == nullptr || report->report.outcome == ss::classify::Outcome::Inconclusive) {
    return SS_OUTCOME_INCONCLUSIVE;
  }
  return SS_OUTCOME_CLASSIFIED;
}

int ss_report_shade_level(const ss_report* report) {
  if (report == nullptr || !report->report.shade) return 0;
  return report->report.shade->level();
}

size_t ss_report_probes_used(const ss_report* report) { return report == nullptr ? 0 : report->report.probes_used(); }

int ss_report_shade8_certificate(const ss_report* report) {
  return report != nullptr && ss::attribution::shade8_certificate(report->report) ? 1 : 0;
}

ss_status ss_report_to_json(const ss_report* report, char** out) {
  return guarded([&] {
    require(report != nullptr && out != nullptr, "null argument");
    json j = ss::classify::report_to_json(report->report);
    j["shade8_certificate"] = ss::attribution::shade8_certificate(report->report);
    *out = dup_string(j.dump(2));
  });
}

ss_status ss_report_to_text(const ss_report* report, char** out) {
  return guarded([&] {
    require(report != nullptr && out != nullptr, "null argument");
    *out = dup_string(ss::classify::report_to_text(report->report));
  });
}

ss_status ss_report_probe_log_csv(const ss_report* report, char** out) {
  return guarded([&] {
    require(report != nullptr && out != nullptr, "null argument");
    *out = dup_string(ss::classify::probe_log_csv(report->report));
  });
}

ss_status ss_simulate(const ss_network* network, const uint8_t* targets, size_t n_targets,
                      const ss_probe_options* options, ss_curves** out) {
  return guarded([&] {
    require(network != nullptr && out != nullptr, "null argument");
    ss_probe_options opts;
    ss_probe_options_init(&opts);
    if (options != nullptr) opts = *options;
    const auto hashes = hashes_in(targets, n_targets);
    const auto plan = plan_for(network->model.floodfill_hashes(), opts);
    auto result = ss::netsim::run_probe_experiment(network->model, hashes, plan, sim_options(opts));
    auto handle = std::make_unique<ss_curves>();
    handle->curves = std::move(result.curves);
    *out = handle.release();
  });
}

void ss_curves_free(ss_curves* curves) { delete curves; }

size_t ss_curves_count(const ss_curves* curves) { return curves == nullptr ? 0 : curves->curves.size(); }

ss_status ss_curves_to_csv(const ss_curves* curves, char** out) {
  return guarded([&] {
    require(curves != nullptr && out != nullptr, "null argument");
    *out = dup_string(ss::netsim::curves_to_csv(curves->curves));
  });
}

ss_status ss_curves_to_json(const ss_curves* curves, char** out) {
  return guarded([&] {
    require(curves != nullptr && out != nullptr, "null argument");
    *out = dup_string(curves_json(curves->curves).dump(2));
  });
}

ss_status ss_curves_export(const ss_curves* curves, const char* path) {
  return guarded([&] {
    require(curves != nullptr && path != nullptr, "null argument");
    ss::netsim::export_curves(curves->curves, path);
  });
}

ss_status ss_genconfig(const char* profile, char** out) {
  return guarded([&] {
    require(profile != nullptr && out != nullptr, "null argument");
    const auto p = ss::config::parse_profile(profile);
    if (!p) throw std::invalid_argument(std::string("unknown profile \"") + profile + "\" (exclusive or ghost)");
    *out = dup_string(ss::config::generate_config(*p));
  });
}

}  // extern "C"
