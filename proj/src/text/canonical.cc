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

#include "np2io/text/canonical.h"

#include <vector>

#include "np2io/common/text.h"
#include "np2io/text/lemmatizer.h"

namespace np2io::text {

Canonicalizer::Canonicalizer(Options options, const StopwordSet* stopwords)
    : options_(options), stopwords_(stopwords != nullptr ? stopwords : &StopwordSet::Default()) {}

Canonicalizer Canonicalizer::Surface() { return Canonicalizer(Options{}); }

Canonicalizer Canonicalizer::Lemmatized() {
  return Canonicalizer(Options{.lemmatize = true, .remove_stopwords = false});
}

Canonicalizer Canonicalizer::ZeroShot(const StopwordSet* stopwords) {
  return Canonicalizer(Options{.lemmatize = true, .remove_stopwords = true}, stopwords);
}

std::string Canonicalizer::operator()(std::string_view phrase) const {
  const std::string lower = ToLowerUtf8(phrase);
  std::vector<std::string> words;
  for (const WordSlice& w : SplitWhitespace(lower)) {
    std::string_view core = TrimPunctuation(w.text);
    if (core.empty()) continue;
    words.emplace_back(core);
  }
  if (options_.remove_stopwords) {
    std::vector<std::string> kept;
    for (const std::string& w : words) {
      if (!stopwords_->Contains(w)) kept.push_back(w);
    }
    if (!kept.empty()) words = std::move(kept);
  }
  if (options_.lemmatize) {
    for (std::string& w : words) w = Lemmatize(w);
  }
  return JoinWords(words);
}

}  // namespace np2io::text
