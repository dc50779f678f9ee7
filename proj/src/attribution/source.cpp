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

#include "attribution/source.hpp"

namespace shadescope::attribution {

std::string console_query_path(const RouterHash& hash) {
  std::string b64 = hash.to_base64();
  while (!b64.empty() && b64.back() == '=') b64.pop_back();
  return "/netdb?r=" + b64;
}

std::optional<RouterInfo> LayeredSource::lookup_local(const RouterHash& hash) {
  if (local_ != nullptr) {
    if (const auto* record = local_->find(hash)) return *record;
  }
  if (remote_ != nullptr) return remote_->lookup_local(hash);
  return std::nullopt;
}

std::optional<RouterInfo> LayeredSource::lookup_console(const RouterHash& hash) {
  if (remote_ == nullptr) return std::nullopt;
  return remote_->lookup_console(hash);
}

classify::ProbeOutcome LayeredSource::probe_floodfill(const RouterHash& floodfill) {
  if (remote_ == nullptr) return classify::ProbeOutcome::Failed;  // nothing to reach
  return remote_->probe_floodfill(floodfill);
}

}  // namespace shadescope::attribution
