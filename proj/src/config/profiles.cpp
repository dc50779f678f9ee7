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

#include "config/profiles.hpp"

namespace shadescope::config {

std::optional<Profile> parse_profile(std::string_view name) {
  if (name == "exclusive") return Profile::Exclusive;
  if (name == "ghost") return Profile::Ghost;
  return std::nullopt;
}

const std::vector<ConfigEntry>& exclusive_entries() {
  static const std::vector<ConfigEntry> kEntries{
      {"router.isHidden", "true", ""},
      {"router.hiddenMode", "true", ""},
      {"i2np.udp.addressSources", "", "empty"},
      {"i2np.ntcp2.autoip", "false", ""},
      {"router.floodfillParticipant", "false", ""},
      {"router.maxParticipatingTunnels", "0", ""},
      {"router.sharePercentage", "0", ""},
      {"router.enablePeerTest", "false", ""},
      {"router.dynamicKeys", "true", "ephemeral identity"},
      {"i2np.udp.requireIntroductions", "true", ""},
  };
  return kEntries;
}

const std::vector<ConfigEntry>& ghost_extension_entries() {
  static const std::vector<ConfigEntry> kEntries{
      {"i2np.laptopMode", "true", "rotate router identity when the external address changes"},
      {"i2np.upnp.enable", "false", "never open ports on the gateway"},
      {"i2np.ipv6", "false", ""},
      {"i2np.ntcp2.enable", "false", "no inbound-capable TCP transport"},
      {"i2np.udp.forceIntroducers", "true", "firewalled declaration"},
      {"router.publishPeerRankings", "false", ""},
      {"stat.full", "false", ""},
      {"router.reseedDisable", "true", "bootstrap from a supplied bundle only"},
  };
  return kEntries;
}

namespace {

void append(std::string& out, const std::vector<ConfigEntry>& entries) {
  for (const auto& e : entries) {
    if (!e.comment.empty()) out += "# " + e.comment + "\n";
    out += e.key + "=" + e.value + "\n";
  }
}

}  // namespace

std::string generate_config(Profile profile) {
  std::string out;
  if (profile == Profile::Exclusive) {
    out += "# router.config: exclusive profile (10 parameters)\n";
    out += "# The router publishes no RouterInfo and refuses to relay.\n";
    append(out, exclusive_entries());
    return out;
  }
  out += "# router.config: ghost profile\n";
  out += "# Base: the 10 exclusive-profile parameters.\n";
  append(out, exclusive_entries());
  out += "#\n";
  out += "# Extension set (non-normative): firewalled declaration, identity rotation and\n";
  out += "# reduced exposure. Best-effort key list; verify against your router version.\n";
  append(out, ghost_extension_entries());
  return out;
}

}  // namespace shadescope::config
