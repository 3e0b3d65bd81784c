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

#ifndef NP2IO_COMMON_TEXT_H_
#define NP2IO_COMMON_TEXT_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace np2io {

// One decoded code point and the byte range it occupies.
struct CodePoint {
  char32_t value;
  size_t begin;
  size_t end;
};

// Decodes UTF-8; malformed bytes come back as U+FFFD covering one byte.
std::vector<CodePoint> DecodeUtf8(std::string_view text);
void AppendUtf8(char32_t cp, std::string& out);
size_t CountCodePoints(std::string_view text);

// Lowercases ASCII, Latin-1, Latin Extended-A, Greek and Cyrillic letters.
// Only mappings that keep the encoded length are applied, so byte offsets
// computed on the input stay valid on the output.
std::string ToLowerUtf8(std::string_view text);
bool HasUppercase(std::string_view text);

// Word characters for boundary tests: ASCII alphanumerics, '_' and any
// non-ASCII byte.
inline bool IsWordByte(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         c == '_' || c >= 0x80;
}

inline bool IsAsciiSpace(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// A whitespace-delimited word and its byte range.
struct WordSlice {
  std::string_view text;
  size_t begin;
  size_t end;
};

std::vector<WordSlice> SplitWhitespace(std::string_view text);
std::string_view TrimPunctuation(std::string_view word);
std::string_view Trim(std::string_view s);
std::string JoinWords(const std::vector<std::string>& words, std::string_view sep = " ");

}  // namespace np2io

#endif  // NP2IO_COMMON_TEXT_H_
