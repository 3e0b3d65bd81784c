// Copyright 2026 The np2io Authors
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

#include "np2io/spans/eligible.h"

#include <algorithm>

namespace np2io {

EligibleTokenSet EligibleTokens(std::span<const TokenSpan> tokens,
                                std::span<const CharSpan> occurrences) {
  EligibleTokenSet out;
  if (occurrences.empty()) return out;
  std::vector<CharSpan> occ(occurrences.begin(), occurrences.end());
  std::sort(occ.begin(), occ.end());
  // Real token spans are ordered by start, so one forward sweep suffices.
  size_t j = 0;
  for (const TokenSpan& t : tokens) {
    if (!t.span) continue;
    const CharSpan& s = *t.span;
    while (j < occ.size() && occ[j].end <= s.start) ++j;
    for (size_t k = j; k < occ.size() && occ[k].start < s.end; ++k) {
      if (s.Overlaps(occ[k])) {
        out.push_back(t.index);
        break;
      }
    }
  }
  return out;
}

}  // namespace np2io
