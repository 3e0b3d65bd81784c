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

#ifndef NP2IO_TEXT_CANONICAL_H_
#define NP2IO_TEXT_CANONICAL_H_

#include <string>
#include <string_view>

#include "np2io/text/stopwords.h"

namespace np2io::text {

// Maps a noun phrase to the key used for phrase-conditional statistics.
// Always lowercases, collapses whitespace and trims edge punctuation from
// each word; lemmatization and stopword removal are optional. When every
// word is a stopword ("they", "i") the stopword filter is not applied, so
// pronoun phrases keep distinct keys.
class Canonicalizer {
 public:
  struct Options {
    bool lemmatize = false;
    bool remove_stopwords = false;
  };

  explicit Canonicalizer(Options options, const StopwordSet* stopwords = nullptr);

  // Lowercase only (NB).
  static Canonicalizer Surface();
  // Lowercase + per-word lemma (NB-L).
  static Canonicalizer Lemmatized();
  // Lowercase + lemma + stopword removal (zero-shot matching).
  static Canonicalizer ZeroShot(const StopwordSet* stopwords = nullptr);

  std::string operator()(std::string_view phrase) const;
  const Options& options() const { return options_; }

 private:
  Options options_;
  const StopwordSet* stopwords_;
};

}  // namespace np2io::text

#endif  // NP2IO_TEXT_CANONICAL_H_
