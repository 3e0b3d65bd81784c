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

#include "np2io/corpus/relevance.h"

#include "np2io/common/errors.h"
#include "np2io/common/text.h"

namespace np2io {

const std::vector<std::string>& VaccineKeywords() {
  static const auto* keywords = new std::vector<std::string>{
      "vaccine", "mrna", "pfizer", "moderna", "j&j", "johnson", "chip", "pharm"};
  return *keywords;
}

std::vector<Post> RelevanceFilter(const std::vector<Post>& posts,
                                  const std::vector<std::string>& keywords, size_t min_chars,
                                  size_t max_chars) {
  if (keywords.empty()) throw ConfigError("relevance filter needs at least one keyword");
  if (min_chars >= max_chars) throw ConfigError("relevance filter needs min_chars < max_chars");
  std::vector<std::string> lowered;
  lowered.reserve(keywords.size());
  for (const std::string& k : keywords) lowered.push_back(ToLowerUtf8(k));

  std::vector<Post> kept;
  for (const Post& post : posts) {
    const size_t length = CountCodePoints(post.text);
    if (length < min_chars || length > max_chars) continue;
    const std::string text = ToLowerUtf8(post.text);
    for (const std::string& k : lowered) {
      if (!k.empty() && text.find(k) != std::string::npos) {
        kept.push_back(post);
        break;
      }
    }
  }
  return kept;
}

}  // namespace np2io
