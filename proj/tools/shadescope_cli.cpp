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

// shadescope command-line front end. Talks to the library only through
// the C interface in <shadescope/shadescope.h>.

#include <shadescope/shadescope.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitInternal = 1;

struct CliError {
  int code;
  std::string message;
};

void check(ss_status status, const std::string& what) {
  if (status == SS_OK) return;
  const int code = status == SS_ERR_INTERNAL ? kExitInternal : kExitInput;
  throw CliError{code, what + ": " + ss_last_error()};
}

std::string take(char* s) {
  std::string out = s != nullptr ? s : "";
  ss_string_free(s);
  return out;
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Snapshot = std::unique_ptr<ss_snapshot, Deleter<ss_snapshot, ss_snapshot_free>>;
using LeaseSets = std::unique_ptr<ss_leasesets, Deleter<ss_leasesets, ss_leasesets_free>>;
using Network = std::unique_ptr<ss_network, Deleter<ss_network, ss_network_free>>;
using Report = std::unique_ptr<ss_report, Deleter<ss_report, ss_report_free>>;
using Curves = std::unique_ptr<ss_curves, Deleter<ss_curves, ss_curves_free>>;

using Hash = std::array<std::uint8_t, 32>;

struct Options {
  std::string netdb;
  std::string leasesets;
  std::string date;
  std::string format = "table";
  std::string out;
  std::optional<std::uint64_t> seed;
  std::size_t batch = 5;
  std::int64_t max_probes = -1;
};

std::string format_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(o.out, std::ios::binary | std::ios::trunc);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
  if (!out) throw CliError{kExitInput, "cannot write " + o.out};
}

const char* date_arg(const Options& o) { return o.date.empty() ? nullptr : o.date.c_str(); }

Hash parse_hash(const std::string& text) {
  Hash h{};
  check(ss_hash_parse(text.c_str(), h.data()), "bad hash \"" + text + "\"");
  return h;
}

Snapshot load_snapshot(const std::string& dir) {
  if (dir.empty()) throw CliError{kExitInput, "no NetDB directory (use --netdb or SHADESCOPE_NETDB)"};
  ss_snapshot* raw = nullptr;
  check(ss_snapshot_load(dir.c_str(), &raw), "cannot load NetDB " + dir);
  return Snapshot(raw);
}

LeaseSets load_leasesets(const std::string& path) {
  if (path.empty()) throw CliError{kExitInput, "no LeaseSet file (use --leasesets)"};
  ss_leasesets* raw = nullptr;
  check(ss_leasesets_load(path.c_str(), &raw), "cannot load LeaseSets " + path);
  return LeaseSets(raw);
}

Network load_network(const std::string& spec_path) {
  ss_network* raw = nullptr;
  check(ss_network_load(spec_path.c_str(), &raw), "network spec " + spec_path);
  return Network(raw);
}

void validate_common(const Options& o) {
  if (!o.date.empty()) {
    Hash scratch{};
    check(ss_daily_mod_key(o.date.c_str(), scratch.data()), "bad --date");
  }
  if (o.batch == 0) throw CliError{kExitInput, "--batch must be positive"};
}

// ---- scan -----------------------------------------------------------------

int cmd_scan(const Options& o, bool with_records) {
  auto snap = load_snapshot(o.netdb);
  ss_snapshot_stats st{};
  check(ss_snapshot_get_stats(snap.get(), &st), "stats");
  const double pct = st.records == 0 ? 0.0 : 100.0 * static_cast<double>(st.floodfill_count) / static_cast<double>(st.records);

  if (o.format == "json") {
    json j = {{"netdb", o.netdb},
              {"files", st.total},
              {"records", st.records},
              {"floodfills", st.floodfill_count},
              {"floodfill_percent", std::round(pct * 10.0) / 10.0},
              {"parse_failures", st.parse_failures},
              {"lenient_recovered", st.lenient_recovered}};
    json shades = json::array();
    for (int level = 1; level <= 7; ++level) {
      shades.push_back({{"level", level}, {"name", ss_shade_name(level)}, {"count", st.shade_histogram[level - 1]}});
    }
    j["shades"] = shades;
    if (with_records) {
      char* s = nullptr;
      check(ss_snapshot_to_json(snap.get(), &s), "records");
      j["records"] = json::parse(take(s))["records"];
    }
    emit(o, j.dump(2));
    return kExitOk;
  }
  if (o.format == "csv") {
    std::string out = "metric,value\n";
    out += "files," + std::to_string(st.total) + "\n";
    out += "records," + std::to_string(st.records) + "\n";
    out += "floodfills," + std::to_string(st.floodfill_count) + "\n";
    out += "floodfill_percent," + format_fixed(pct, 1) + "\n";
    out += "parse_failures," + std::to_string(st.parse_failures) + "\n";
    out += "lenient_recovered," + std::to_string(st.lenient_recovered) + "\n";
    for (int level = 1; level <= 7; ++level) {
      out += "shade_" + std::to_string(level) + "," + std::to_string(st.shade_histogram[level - 1]) + "\n";
    }
    emit(o, out);
    return kExitOk;
  }
  std::ostringstream t;
  t << "NetDB snapshot:    " << o.netdb << "\n";
  t << "Files:             " << st.total << "\n";
  t << "RouterInfo:        " << st.records << "\n";
  t << "Floodfill:         " << st.floodfill_count << " (" << format_fixed(pct, 1) << "%)\n";
  t << "Parse failures:    " << st.parse_failures << "\n";
  t << "Lenient recovered: " << st.lenient_recovered << "\n";
  t << "Shade histogram:\n";
  for (int level = 1; level <= 7; ++level) {
    char line[96];
    std::snprintf(line, sizeof line, "  Shade %d  %-9s %zu\n", level, ss_shade_name(level), st.shade_histogram[level - 1]);
    t << line;
  }
  emit(o, t.str());
  return kExitOk;
}

// ---- lookup ---------------------------------------------------------------

// "<shade>" or "<shade>:<ordinal>" against the simulated network.
Hash pick_target(const ss_network* net, const std::string& selector) {
  const auto colon = selector.find(':');
  int shade = 0;
  std::size_t ordinal = 0;
  try {
    shade = std::stoi(selector.substr(0, colon));
    if (colon != std::string::npos) ordinal = std::stoul(selector.substr(colon + 1));
  } catch (const std::exception&) {
    throw CliError{kExitInput, "bad target selector \"" + selector + "\" (expected <shade>[:<ordinal>])"};
  }
  Hash h{};
  check(ss_network_pick(net, shade, ordinal, h.data()), "target selector " + selector);
  return h;
}

struct LookupArgs {
  std::string hash;
  std::string sim_spec;
  std::string sim_target;
  double failure_rate = 0.0;
  bool local_published = false;
};

ss_probe_options probe_options(const Options& o) {
  ss_probe_options opts;
  ss_probe_options_init(&opts);
  opts.batch_size = o.batch;
  opts.max_probes = o.max_probes;
  if (o.seed) {
    opts.shuffle = 1;
    opts.shuffle_seed = *o.seed;
    opts.failure_seed = *o.seed;
  }
  return opts;
}

int cmd_lookup(const Options& o, const LookupArgs& a) {
  Snapshot snap;
  if (!o.netdb.empty()) snap = load_snapshot(o.netdb);
  Network net;
  if (!a.sim_spec.empty()) net = load_network(a.sim_spec);
  if (!snap && !net) throw CliError{kExitInput, "lookup needs --netdb (or SHADESCOPE_NETDB) and/or --sim"};

  Hash target{};
  if (!a.sim_target.empty()) {
    if (!net) throw CliError{kExitInput, "--sim-target requires --sim"};
    target = pick_target(net.get(), a.sim_target);
  } else if (!a.hash.empty()) {
    target = parse_hash(a.hash);
  } else {
    throw CliError{kExitInput, "lookup needs a router hash or --sim-target"};
  }

  auto opts = probe_options(o);
  opts.failure_rate = a.failure_rate;
  opts.local_has_published = a.local_published ? 1 : 0;
  ss_report* raw = nullptr;
  check(ss_lookup(snap.get(), net.get(), target.data(), &opts, &raw), "lookup");
  Report report(raw);

  char* s = nullptr;
  if (o.format == "json") {
    check(ss_report_to_json(report.get(), &s), "report");
    emit(o, json::parse(take(s)).dump(2));
  } else if (o.format == "csv") {
    check(ss_report_probe_log_csv(report.get(), &s), "report");
    emit(o, take(s));
  } else {
    check(ss_report_to_text(report.get(), &s), "report");
    emit(o, take(s));
  }
  return ss_report_outcome(report.get()) == SS_OUTCOME_INCONCLUSIVE ? kExitInconclusive : kExitOk;
}

// ---- xor-assoc ------------------------------------------------------------

int cmd_xor_assoc(const Options& o, const std::string& target_text, bool table, bool require_floodfill) {
  auto snap = load_snapshot(o.netdb);
  auto ls = load_leasesets(o.leasesets);
  const Hash target = parse_hash(target_text);

  const bool want_table = table || o.format == "csv";
  char* s = nullptr;
  check(ss_xor_association(snap.get(), ls.get(), target.data(), date_arg(o), want_table ? 1 : 0, &s), "association");
  json j = json::parse(take(s));

  if (!j.value("target_is_floodfill", false)) {
    const std::string msg = "target " + j["target"].get<std::string>() + " is not a floodfill in the snapshot";
    if (require_floodfill) {
      std::cerr << "warning: " << msg << "\n";
      j["warnings"].push_back(msg);
    }
  }
  for (const auto& w : j["warnings"]) {
    if (w.get<std::string>().find("not a floodfill") == std::string::npos) std::cerr << "warning: " << w.get<std::string>() << "\n";
  }

  if (o.format == "json") {
    emit(o, j.dump(2));
    return kExitOk;
  }
  if (o.format == "csv") {
    std::string out = "b32,routing_key,target_distance,nearest_other,nearest_other_distance,associated\n";
    for (const auto& row : j["table"]) {
      out += row["b32"].get<std::string>() + "," + row["routing_key"].get<std::string>() + "," +
             row["target_distance"].get<std::string>() + "," +
             (row["nearest_other"].is_null() ? std::string() : row["nearest_other"].get<std::string>()) + "," +
             (row["nearest_other_distance"].is_null() ? std::string() : row["nearest_other_distance"].get<std::string>()) +
             "," + (row["associated"].get<bool>() ? "true" : "false") + "\n";
    }
    emit(o, out);
    return kExitOk;
  }
  std::ostringstream t;
  t << "Target:      " << j["target"].get<std::string>() << (j["target_is_floodfill"].get<bool>() ? "" : "  (not a floodfill)")
    << "\n";
  t << "Date:        " << j["date"].get<std::string>() << "\n";
  t << "Floodfills:  " << j["floodfill_count"].get<std::size_t>() << "\n";
  t << "Candidates:  " << j["candidates"].get<std::size_t>() << "\n";
  t << "Associated:  " << j["associated"].size() << "\n";
  for (const auto& b32 : j["associated"]) t << "  " << b32.get<std::string>() << "\n";
  if (table) {
    t << "\n";
    for (const auto& row : j["table"]) {
      t << (row["associated"].get<bool>() ? "* " : "  ") << row["b32"].get<std::string>() << "\n";
      t << "    d(target)  " << row["target_distance"].get<std::string>() << "\n";
      if (!row["nearest_other"].is_null()) {
        t << "    d(nearest) " << row["nearest_other_distance"].get<std::string>() << "  "
          << row["nearest_other"].get<std::string>() << "\n";
      }
    }
  }
  emit(o, t.str());
  return kExitOk;
}

// ---- gateways -------------------------------------------------------------

int cmd_gateways(const Options& o, const std::string& target) {
  auto ls = load_leasesets(o.leasesets);
  char* s = nullptr;
  check(ss_gateway_scan(ls.get(), target.c_str(), &s), "gateway scan");
  const json j = json::parse(take(s));
  if (o.format == "json") {
    emit(o, j.dump(2));
    return kExitOk;
  }
  if (o.format == "csv") {
    std::string out = "leaseset_index,lease_index,destination,b32,gateway,tunnel_id,match_kind\n";
    for (const auto& m : j["matches"]) {
      out += std::to_string(m["leaseset_index"].get<std::size_t>()) + "," + std::to_string(m["lease_index"].get<std::size_t>()) +
             "," + m["destination"].get<std::string>() + "," + (m["b32"].is_null() ? "" : m["b32"].get<std::string>()) + "," +
             m["gateway"].get<std::string>() + "," + std::to_string(m["tunnel_id"].get<std::uint32_t>()) + "," +
             m["match_kind"].get<std::string>() + "\n";
    }
    emit(o, out);
    return kExitOk;
  }
  std::ostringstream t;
  t << "Target:     " << j["target"].get<std::string>() << " (" << j["prefix_bits"].get<int>() << " bits)\n";
  t << "LeaseSets:  " << j["leasesets"].get<std::size_t>() << "\n";
  t << "Matches:    " << j["matches"].size() << "\n";
  for (const auto& m : j["matches"]) {
    t << "  " << (m["b32"].is_null() ? m["destination"].get<std::string>() : m["b32"].get<std::string>()) << "  lease "
      << m["lease_index"].get<std::size_t>() << "  tunnel " << m["tunnel_id"].get<std::uint32_t>() << "  "
      << m["match_kind"].get<std::string>() << "\n";
  }
  t << "Note:       " << j["note"].get<std::string>() << "\n";
  emit(o, t.str());
  return kExitOk;
}

// ---- b32 ------------------------------------------------------------------

std::vector<std::uint8_t> read_destination_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kExitInput, "cannot read " + path};
  std::string content{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};

  std::string trimmed;
  bool textual = !content.empty();
  for (char c : content) {
    if (c == '\n' || c == '\r' || c == ' ' || c == '\t') continue;
    const bool b64 = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' || c == '~' || c == '=';
    if (!b64) {
      textual = false;
      break;
    }
    trimmed += c;
  }
  if (textual && trimmed.size() >= 516) {
    std::vector<std::uint8_t> out;
    int acc = 0, bits = 0;
    for (char c : trimmed) {
      if (c == '=') break;
      int v = 0;
      if (c >= 'A' && c <= 'Z') v = c - 'A';
      else if (c >= 'a' && c <= 'z') v = c - 'a' + 26;
      else if (c >= '0' && c <= '9') v = c - '0' + 52;
      else if (c == '-') v = 62;
      else v = 63;
      acc = (acc << 6) | v;
      bits += 6;
      if (bits >= 8) {
        bits -= 8;
        out.push_back(static_cast<std::uint8_t>((acc >> bits) & 0xff));
      }
    }
    return out;
  }
  return {content.begin(), content.end()};
}

int cmd_b32(const Options& o, const std::string& path) {
  const auto bytes = read_destination_file(path);
  char* addr = nullptr;
  std::size_t ds = 0;
  check(ss_destination_b32(bytes.data(), bytes.size(), &addr, &ds), "malformed destination " + path);
  const std::string address = take(addr);
  const int cert_type = bytes[384];
  if (o.format == "json") {
    emit(o, json{{"address", address}, {"identity_length", ds}, {"cert_type", cert_type}}.dump(2));
  } else if (o.format == "csv") {
    emit(o, "address,identity_length,cert_type\n" + address + "," + std::to_string(ds) + "," + std::to_string(cert_type) + "\n");
  } else {
    emit(o, "b32:       " + address + "\nd_s = " + std::to_string(ds) + "\ncert type: " + std::to_string(cert_type) + "\n");
  }
  return kExitOk;
}

// ---- simulate -------------------------------------------------------------

struct TargetRef {
  Hash hash;
  int shade;
};

// Comma list of "<shade>" or "<shade>x<count>"; default: first router of
// every shade present.
std::vector<TargetRef> simulation_targets(const ss_network* net, const std::string& spec) {
  std::vector<TargetRef> out;
  if (spec.empty()) {
    for (int shade = 1; shade <= 8; ++shade) {
      Hash h{};
      if (ss_network_pick(net, shade, 0, h.data()) == SS_OK) out.push_back({h, shade});
    }
    return out;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto x = item.find('x');
    int shade = 0;
    std::size_t count = 1;
    try {
      shade = std::stoi(item.substr(0, x));
      if (x != std::string::npos) count = std::stoul(item.substr(x + 1));
    } catch (const std::exception&) {
      throw CliError{kExitInput, "bad --targets entry \"" + item + "\" (expected <shade>[x<count>])"};
    }
    for (std::size_t i = 0; i < count; ++i) {
      Hash h{};
      check(ss_network_pick(net, shade, i, h.data()), "--targets " + item);
      out.push_back({h, shade});
    }
  }
  if (out.empty()) throw CliError{kExitInput, "--targets selects nothing"};
  return out;
}

int cmd_simulate(const Options& o, const std::string& spec_path, const std::string& targets_spec) {
  if (spec_path.empty()) throw CliError{kExitInput, "simulate needs --spec"};
  auto net = load_network(spec_path);
  ss_metrics m{};
  check(ss_network_get_metrics(net.get(), &m), "metrics");
  const auto targets = simulation_targets(net.get(), targets_spec);
  std::vector<std::uint8_t> packed;
  for (const auto& t : targets) packed.insert(packed.end(), t.hash.begin(), t.hash.end());

  const auto opts = probe_options(o);
  ss_curves* raw = nullptr;
  check(ss_simulate(net.get(), packed.data(), targets.size(), &opts, &raw), "simulate");
  Curves curves(raw);

  if (!o.out.empty()) check(ss_curves_export(curves.get(), o.out.c_str()), "write " + o.out);

  char* s = nullptr;
  check(ss_curves_to_json(curves.get(), &s), "curves");
  const json cj = json::parse(take(s));

  if (o.format == "csv") {
    if (o.out.empty()) {
      check(ss_curves_to_csv(curves.get(), &s), "curves");
      std::cout << take(s);
    }
    return kExitOk;
  }
  if (o.format == "json") {
    json j = {{"metrics",
               {{"total", m.total}, {"published", m.published}, {"exclusive", m.exclusive}, {"floodfills", m.floodfills},
                {"rho", m.rho}, {"xi", m.xi}}},
              {"curves", json::array()}};
    for (std::size_t i = 0; i < targets.size(); ++i) {
      json c = cj.at(i);
      c["shade"] = targets[i].shade;
      j["curves"].push_back(c);
    }
    if (!o.out.empty()) j["csv"] = o.out;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::ostringstream t;
  t << "Routers:     " << m.total << "  (published " << m.published << ", exclusive " << m.exclusive << ")\n";
  t << "Floodfills:  " << m.floodfills << "\n";
  t << "ρ = " << format_fixed(m.rho, 3) << "\n";
  t << "ξ = " << format_fixed(m.xi, 3) << "\n";
  t << "\n";
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const auto& c = cj.at(i);
    const auto& points = c["points"];
    const std::size_t probes = points.empty() ? 0 : points.back()["cumulative_probes"].get<std::size_t>();
    t << "Shade " << targets[i].shade << "  " << c["target"].get<std::string>() << "  ";
    if (c["first_hit_probes"].is_null()) {
      t << "no hit in " << probes << " probes\n";
    } else {
      t << "first hit after " << c["first_hit_probes"].get<std::size_t>() << " probes\n";
    }
  }
  if (!o.out.empty()) t << "\nCurves written to " << o.out << "\n";
  std::cout << t.str();
  return kExitOk;
}

// ---- genconfig ------------------------------------------------------------

int cmd_genconfig(const Options& o, const std::string& profile) {
  char* s = nullptr;
  check(ss_genconfig(profile.c_str(), &s), "genconfig");
  const std::string text = take(s);
  if (o.format == "json" || o.format == "csv") {
    json params = json::array();
    std::stringstream lines(text);
    std::string line;
    std::string csv = "key,value\n";
    while (std::getline(lines, line)) {
      const auto eq = line.find('=');
      if (line.empty() || line[0] == '#' || eq == std::string::npos) continue;
      params.push_back({{"key", line.substr(0, eq)}, {"value", line.substr(eq + 1)}});
      csv += line.substr(0, eq) + "," + line.substr(eq + 1) + "\n";
    }
    emit(o, o.format == "json" ? json{{"profile", profile}, {"parameters", params}}.dump(2) : csv);
    return kExitOk;
  }
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.out, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw CliError{kExitInput, "cannot write " + o.out};
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shadescope: I2P router visibility attribution toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(ss_version()));

  Options o;
  app.add_option("--netdb", o.netdb, "NetDB directory of routerInfo-*.dat files")->envname("SHADESCOPE_NETDB");
  app.add_option("--leasesets", o.leasesets, "LeaseSet text file");
  app.add_option("--date", o.date, "UTC date yyyyMMdd for routing keys (default: today)");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table", "csv"}));
  app.add_option("--out", o.out, "Write output to this path");
  app.add_option("--seed", o.seed, "Shuffle the floodfill probe order with this seed");
  app.add_option("--batch", o.batch, "Probes per batch before re-checking the console");
  app.add_option("--max-probes", o.max_probes, "Probe budget (default: every floodfill)");

  auto* scan = app.add_subcommand("scan", "Summarise a NetDB snapshot");
  bool with_records = false;
  scan->add_flag("--records", with_records, "Include per-record detail (json format)");

  auto* lookup = app.add_subcommand("lookup", "Classify a router by local, console and floodfill evidence");
  LookupArgs la;
  lookup->add_option("hash,--target", la.hash, "Router hash (base64, hex or b32); use --target=<hash> when it starts with '-'");
  lookup->add_option("--sim", la.sim_spec, "Network spec JSON used as the simulated console and floodfills");
  lookup->add_option("--sim-target", la.sim_target, "Pick the target from the simulated network: <shade>[:<ordinal>]");
  lookup->add_option("--failure-rate", la.failure_rate, "Simulated probe failure probability")->check(CLI::Range(0.0, 1.0));
  lookup->add_flag("--local-published", la.local_published, "Simulated local NetDB holds every published record");

  auto* xor_assoc = app.add_subcommand("xor-assoc", "Eepsites whose routing key is nearest to a floodfill");
  std::string assoc_target;
  bool table = false;
  bool require_floodfill = false;
  xor_assoc->add_option("target,--target", assoc_target, "Target router hash")->required();
  xor_assoc->add_flag("--table", table, "Print the per-eepsite distance table");
  xor_assoc->add_flag("--require-floodfill", require_floodfill, "Warn when the target is not a floodfill");

  auto* gateways = app.add_subcommand("gateways", "Find leases whose tunnel gateway matches a router");
  std::string gateway_target;
  gateways->add_option("target,--target", gateway_target, "Router hash or base64 prefix (at least 6 characters)")->required();

  auto* b32 = app.add_subcommand("b32", "Derive the b32 address of a destination file (raw or base64)");
  std::string dest_file;
  b32->add_option("file", dest_file, "Destination file")->required();

  auto* simulate = app.add_subcommand("simulate", "Run probe experiments on a generated network");
  std::string spec_path;
  std::string targets_spec;
  simulate->add_option("--spec", spec_path, "Network spec JSON")->required();
  simulate->add_option("--targets", targets_spec, "Comma list of <shade>[x<count>] (default: one per shade)");

  auto* genconfig = app.add_subcommand("genconfig", "Emit a router configuration profile");
  std::string profile = "exclusive";
  genconfig->add_option("profile", profile, "exclusive or ghost")->check(CLI::IsMember({"exclusive", "ghost"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    validate_common(o);
    if (*scan) return cmd_scan(o, with_records);
    if (*lookup) return cmd_lookup(o, la);
    if (*xor_assoc) return cmd_xor_assoc(o, assoc_target, table, require_floodfill);
    if (*gateways) return cmd_gateways(o, gateway_target);
    if (*b32) return cmd_b32(o, dest_file);
    if (*simulate) return cmd_simulate(o, spec_path, targets_spec);
    if (*genconfig) return cmd_genconfig(o, profile);
  } catch (const CliError& e) {
    std::cerr << "shadescope: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "shadescope: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}
