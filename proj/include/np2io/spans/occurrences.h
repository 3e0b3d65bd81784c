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

#ifndef NP2IO_SPANS_OCCURRENCES_H_
#define NP2IO_SPANS_OCCURRENCES_H_

#include <string_view>
#include <vector>

#include "np2io/spans/char_span.h"

namespace np2io {

// All non-overlapping, case-insensitive, left-to-right greedy matches of
// `phrase` that respect word boundaries (a phrase edge that is a word
// character must not touch another word character). Throws
// ContractViolation on an empty phrase.
std::vector<CharSpan> FindOccurrences(std::string_view text, std::string_view phrase);

// Every (possibly overlapping) raw substring match, case-insensitive.
std::vector<CharSpan> FindSubstrings(std::string_view text, std::string_view phrase);

// Spans used to label an example: word-boundary occurrences, or raw
// substring matches when there are none ("microchip" inside "microchips").
std::vector<CharSpan> LocatePhrase(std::string_view text, std::string_view phrase);

}  // namespace np2io

#endif  // NP2IO_SPANS_OCCURRENCES_H_
