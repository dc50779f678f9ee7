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

#include "classify/report.hpp"
#include "model/router_info.hpp"
#include "netdb/snapshot.hpp"

namespace shadescope::attribution {

/// Where classify_remote looks for records. Lookup results must stay stable
/// within one run unless a probe intervened.
class NetDbSource {
 public:
  virtual ~NetDbSource() = default;

  virtual std::optional<RouterInfo> lookup_local(const RouterHash& hash) = 0;
  virtual std::optional<RouterInfo> lookup_console(const RouterHash& hash) = 0;
  /// Asks the console to query floodfill `floodfill`, expanding its view.
  /// Transport failures are reported as ProbeOutcome::Failed (exceptions
  /// thrown from here are treated the same way by classify_remote).
  virtual classify::ProbeOutcome probe_floodfill(const RouterHash& floodfill) = 0;
};

/// Console request path for a hash lookup: "/netdb?r=<b64 without padding>".
std::string console_query_path(const RouterHash& hash);

inline constexpr const char* kConsoleHost = "127.0.0.1";
inline constexpr int kConsolePort = 7657;

/// Local view backed by a loaded snapshot, remote lookups delegated to
/// `remote`. Without a remote, console lookups miss and probes fail.
class LayeredSource final : public NetDbSource {
 public:
  LayeredSource(const netdb::NetDbSnapshot* local, NetDbSource* remote) : local_(local), remote_(remote) {}

  std::optional<RouterInfo> lookup_local(const RouterHash& hash) override;
  std::optional<RouterInfo> lookup_console(const RouterHash& hash) override;
  classify::ProbeOutcome probe_floodfill(const RouterHash& floodfill) override;

 private:
  const netdb::NetDbSnapshot* local_;
  NetDbSource* remote_;
};

}  // namespace shadescope::attribution
