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

#ifndef NP2IO_TEXT_STOPWORDS_H_
#define NP2IO_TEXT_STOPWORDS_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>

namespace np2io::text {

// Lowercase stopword set. The default list is compiled in from
// data/stopwords_en.txt so results do not depend on a runtime path.
class StopwordSet {
 public:
  StopwordSet() = default;
  explicit StopwordSet(std::unordered_set<std::string> words) : words_(std::move(words)) {}

  static const StopwordSet& Default();
  // One word per line; blank lines and lines starting with '#' are ignored.
  static StopwordSet LoadFile(const std::filesystem::path& path);
  static StopwordSet Parse(std::string_view contents);

  bool Contains(std::string_view word) const { return words_.contains(std::string(word)); }
  size_t size() const { return words_.size(); }
  const std::unordered_set<std::string>& words() const { return words_; }

 private:
  std::unordered_set<std::string> words_;
};

}  // namespace np2io::text

#endif  // NP2IO_TEXT_STOPWORDS_H_
