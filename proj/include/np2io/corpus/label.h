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

#ifndef NP2IO_CORPUS_LABEL_H_
#define NP2IO_CORPUS_LABEL_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace np2io {

// Class index order is fixed: it is the column order of every probability
// vector and classifier head in the project.
enum class Label : unsigned char { kInsider = 0, kOutsider = 1, kNa = 2 };

inline constexpr size_t kNumLabels = 3;
inline constexpr std::array<Label, kNumLabels> kAllLabels = {Label::kInsider, Label::kOutsider,
                                                             Label::kNa};

// Precedence used whenever counts tie: OUTSIDER, then INSIDER, then NA.
inline constexpr std::array<Label, kNumLabels> kTieBreakOrder = {Label::kOutsider,
                                                                 Label::kInsider, Label::kNa};

constexpr size_t Index(Label l) { return static_cast<size_t>(l); }
constexpr Label LabelFromIndex(size_t i) { return static_cast<Label>(i); }

// "insider" | "outsider" | "na"
std::string_view ToString(Label label);
// Case-insensitive inverse of ToString.
std::optional<Label> ParseLabel(std::string_view text);

using LabelCounts = std::array<long, kNumLabels>;

// Label with the highest count, ties resolved by kTieBreakOrder. Sets
// *tie_broken when more than one label reaches the maximum.
Label ArgmaxWithTieBreak(const LabelCounts& counts, bool* tie_broken = nullptr);

}  // namespace np2io

#endif  // NP2IO_CORPUS_LABEL_H_
