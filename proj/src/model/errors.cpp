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

#include "model/errors.hpp"

namespace shadescope {

std::string_view to_string(ParseErrorKind kind) noexcept {
  switch (kind) {
    case ParseErrorKind::TruncatedIdentity: return "truncated identity";
    case ParseErrorKind::TruncatedHeader: return "truncated header";
    case ParseErrorKind::TruncatedAddress: return "truncated address";
    case ParseErrorKind::TruncatedMapping: return "truncated mapping";
    case ParseErrorKind::MappingLengthMismatch: return "mapping length mismatch";
    case ParseErrorKind::MalformedMapping: return "malformed mapping";
    case ParseErrorKind::UnexpectedPeers: return "unexpected peer list";
  }
  return "unknown";
}

namespace {
std::string describe(ParseErrorKind kind, std::size_t offset, const std::string& detail) {
  std::string msg{to_string(kind)};
  msg += " at offset " + std::to_string(offset);
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}
}  // namespace

ParseError::ParseError(ParseErrorKind kind, std::size_t offset, const std::string& detail)
    : std::runtime_error(describe(kind, offset, detail)), kind_(kind), offset_(offset) {}

}  // namespace shadescope
