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

#include "np2io/spans/occurrences.h"

#include <string>

#include "np2io/common/errors.h"
#include "np2io/common/text.h"

namespace np2io {

std::vector<CharSpan> FindOccurrences(std::string_view text, std::string_view phrase) {
  if (phrase.empty()) throw ContractViolation("FindOccurrences: empty phrase");
  const std::string hay = ToLowerUtf8(text);
  const std::string needle = ToLowerUtf8(phrase);
  const bool left_word = IsWordByte(static_cast<unsigned char>(needle.front()));
  const bool right_word = IsWordByte(static_cast<unsigned char>(needle.back()));

  std::vector<CharSpan> spans;
  size_t from = 0;
  while (from + needle.size() <= hay.size()) {
    const size_t pos = hay.find(needle, from);
    if (pos == std::string::npos) break;
    const size_t end = pos + needle.size();
    const bool left_ok =
        !left_word || pos == 0 || !IsWordByte(static_cast<unsigned char>(hay[pos - 1]));
    const bool right_ok =
        !right_word || end == hay.size() || !IsWordByte(static_cast<unsigned char>(hay[end]));
    if (left_ok && right_ok) {
      spans.push_back({pos, end});
      from = end;
    } else {
      from = pos + 1;
    }
  }
  return spans;
}

std::vector<CharSpan> FindSubstrings(std::string_view text, std::string_view phrase) {
  if (phrase.empty()) throw ContractViolation("FindSubstrings: empty phrase");
  const std::string hay = ToLowerUtf8(text);
  const std::string needle = ToLowerUtf8(phrase);
  std::vector<CharSpan> spans;
  for (size_t pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) {
    spans.push_back({pos, pos + needle.size()});
  }
  return spans;
}

std::vector<CharSpan> LocatePhrase(std::string_view text, std::string_view phrase) {
  std::vector<CharSpan> spans = FindOccurrences(text, phrase);
  if (spans.empty()) spans = FindSubstrings(text, phrase);
  return spans;
}

}  // namespace np2io
