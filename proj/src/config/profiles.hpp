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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace shadescope::config {

enum class Profile { Exclusive, Ghost };

std::optional<Profile> parse_profile(std::string_view name);

struct ConfigEntry {
  std::string key;
  std::string value;
  std::string comment;  // emitted as a '#' line above the entry when non-empty
};

/// The ten router.config settings that keep a router out of every NetDB view.
const std::vector<ConfigEntry>& exclusive_entries();
/// Additional, non-normative settings layered on top by the ghost profile.
const std::vector<ConfigEntry>& ghost_extension_entries();

/// router.config text: '#' comment lines and key=value lines, LF endings.
std::string generate_config(Profile profile);

}  // namespace shadescope::config
