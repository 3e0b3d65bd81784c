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

#include "np2io/corpus/label.h"

#include <algorithm>

#include "np2io/common/text.h"

namespace np2io {

std::string_view ToString(Label label) {
  switch (label) {
    case Label::kInsider: return "insider";
    case Label::kOutsider: return "outsider";
    case Label::kNa: return "na";
  }
  return "na";
}

std::optional<Label> ParseLabel(std::string_view text) {
  const std::string lower = ToLowerUtf8(Trim(text));
  for (Label l : kAllLabels) {
    if (lower == ToString(l)) return l;
  }
  return std::nullopt;
}

Label ArgmaxWithTieBreak(const LabelCounts& counts, bool* tie_broken) {
  const long best = *std::max_element(counts.begin(), counts.end());
  const auto winners = std::count(counts.begin(), counts.end(), best);
  if (tie_broken != nullptr) *tie_broken = winners > 1;
  for (Label l : kTieBreakOrder) {
    if (counts[Index(l)] == best) return l;
  }
  return Label::kNa;
}

}  // namespace np2io
