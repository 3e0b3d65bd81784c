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

#ifndef NP2IO_SPANS_CHAR_SPAN_H_
#define NP2IO_SPANS_CHAR_SPAN_H_

#include <cstddef>
#include <string_view>

namespace np2io {

// Half-open byte interval [start, end) into a UTF-8 post text.
struct CharSpan {
  size_t start = 0;
  size_t end = 0;

  size_t size() const { return end - start; }
  bool Overlaps(const CharSpan& other) const { return start < other.end && end > other.start; }
  bool Contains(size_t pos) const { return pos >= start && pos < end; }
  bool ValidFor(std::string_view text) const { return start < end && end <= text.size(); }
  std::string_view Slice(std::string_view text) const { return text.substr(start, end - start); }

  bool operator==(const CharSpan&) const = default;
  auto operator<=>(const CharSpan&) const = default;
};

}  // namespace np2io

#endif  // NP2IO_SPANS_CHAR_SPAN_H_
