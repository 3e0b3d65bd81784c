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

#include "np2io/text/stopwords.h"

#include "np2io/common/files.h"
#include "np2io/common/text.h"

namespace np2io::text {
namespace {

constexpr std::string_view kDefaultList =
#include "stopwords_en.inc"
    ;

}  // namespace

const StopwordSet& StopwordSet::Default() {
  static const StopwordSet* set = new StopwordSet(Parse(kDefaultList));
  return *set;
}

StopwordSet StopwordSet::LoadFile(const std::filesystem::path& path) {
  return Parse(ReadFile(path));
}

StopwordSet StopwordSet::Parse(std::string_view contents) {
  std::unordered_set<std::string> words;
  size_t pos = 0;
  while (pos <= contents.size()) {
    size_t nl = contents.find('\n', pos);
    if (nl == std::string_view::npos) nl = contents.size();
    std::string_view line = Trim(contents.substr(pos, nl - pos));
    if (!line.empty() && line.front() != '#') words.insert(ToLowerUtf8(line));
    pos = nl + 1;
  }
  return StopwordSet(std::move(words));
}

}  // namespace np2io::text
