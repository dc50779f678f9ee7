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

// Table of the eight visibility rows as literal predicates, resolved by a
// fixed row precedence. Shares no code with the library classifier.

#include <array>
#include <optional>

namespace oracle {

struct Inputs {
  bool present;     // record in view
  bool floodfill;   // 'f'
  bool hidden;      // 'H'
  bool firewalled;  // 'U'
  char bw;          // 0 when absent
  bool direct;      // direct address
  bool introducer;  // introducer declared
};

inline bool high_cap(char bw) { return bw == 'N' || bw == 'O' || bw == 'P' || bw == 'X'; }

/// Row predicate for shade `level` exactly as tabulated.
inline bool row_holds(int level, const Inputs& in) {
  switch (level) {
    case 1: return in.present && in.floodfill && in.direct;
    case 2: return in.present && high_cap(in.bw) && in.direct;
    case 3: return in.present && !high_cap(in.bw) && in.direct;
    case 4: return in.present && in.firewalled && in.direct;
    case 5: return in.present && !in.direct && in.introducer;
    case 6: return in.present && in.hidden && !in.direct;
    case 7: return in.present && !in.direct && !in.introducer;
    case 8: return !in.present;
  }
  return false;
}

inline constexpr std::array<int, 8> kRowPrecedence = {8, 1, 4, 2, 3, 5, 6, 7};

inline int expected_shade(const Inputs& in) {
  for (int level : kRowPrecedence) {
    if (row_holds(level, in)) return level;
  }
  return 0;
}

}  // namespace oracle
