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

#include "np2io/baselines/cbow.h"

#include "absl/status/status.h"
#include "np2io/common/errors.h"
#include "np2io/common/log.h"
#include "np2io/common/text.h"
#include "np2io/spans/occurrences.h"
#include "np2io/text/lemmatizer.h"

namespace np2io {
namespace {

void AddContextWord(std::string_view raw, const text::StopwordSet& stopwords,
                    std::vector<std::string>& out) {
  const std::string word = ToLowerUtf8(TrimPunctuation(raw));
  if (word.empty() || stopwords.Contains(word)) return;
  out.push_back(text::Lemmatize(word));
}

}  // namespace

absl::StatusOr<std::vector<std::string>> CbowContextWords(std::string_view post,
                                                          std::string_view phrase, int window,
                                                          const text::StopwordSet& stopwords) {
  if (window < 1) return absl::InvalidArgumentError("window must be at least 1");
  if (Trim(phrase).empty()) return absl::InvalidArgumentError("empty phrase");
  const std::vector<CharSpan> occurrences = LocatePhrase(post, Trim(phrase));
  if (occurrences.empty()) {
    return absl::NotFoundError("phrase '" + std::string(phrase) + "' not found in post");
  }
  const CharSpan anchor = occurrences.front();
  const std::vector<WordSlice> words = SplitWhitespace(post);
  std::vector<size_t> before;
  std::vector<size_t> after;
  for (size_t i = 0; i < words.size(); ++i) {
    if (words[i].end <= anchor.start) {
      before.push_back(i);
    } else if (words[i].begin >= anchor.end) {
      after.push_back(i);
    }
  }
  std::vector<std::string> out;
  const size_t w = static_cast<size_t>(window);
  for (size_t k = before.size() > w ? before.size() - w : 0; k < before.size(); ++k) {
    AddContextWord(words[before[k]].text, stopwords, out);
  }
  for (size_t k = 0; k < after.size() && k < w; ++k) {
    AddContextWord(words[after[k]].text, stopwords, out);
  }
  return out;
}

absl::StatusOr<std::vector<float>> CbowFeaturize(std::string_view post, std::string_view phrase,
                                                 int window, const EmbeddingTable& embeddings,
                                                 const text::StopwordSet& stopwords) {
  absl::StatusOr<std::vector<std::string>> words =
      CbowContextWords(post, phrase, window, stopwords);
  if (!words.ok()) return words.status();
  std::vector<double> sum(embeddings.dim(), 0.0);
  size_t found = 0;
  for (const std::string& w : *words) {
    const std::vector<float>* v = embeddings.Find(w);
    if (v == nullptr) continue;
    for (size_t i = 0; i < sum.size(); ++i) sum[i] += (*v)[i];
    ++found;
  }
  std::vector<float> out(sum.size(), 0.0f);
  if (found > 0) {
    for (size_t i = 0; i < sum.size(); ++i) out[i] = static_cast<float>(sum[i] / found);
  }
  return out;
}

std::unordered_set<std::string> CbowVocabulary(const std::vector<LabeledExample>& examples,
                                               const text::StopwordSet& stopwords) {
  std::unordered_set<std::string> vocab;
  std::vector<std::string> words;
  for (const LabeledExample& ex : examples) {
    words.clear();
    for (const WordSlice& w : SplitWhitespace(ex.post.text)) AddContextWord(w.text, stopwords, words);
    vocab.insert(words.begin(), words.end());
  }
  return vocab;
}

CbowPredictor::CbowPredictor(int window, std::shared_ptr<const EmbeddingTable> embeddings,
                             const text::StopwordSet* stopwords, GbdtModel model)
    : window_(window),
      embeddings_(std::move(embeddings)),
      stopwords_(stopwords != nullptr ? stopwords : &text::StopwordSet::Default()),
      model_(std::move(model)) {
  if (window_ < 1) throw ConfigError("CBOW window must be at least 1");
  if (embeddings_ == nullptr) throw ConfigError("CBOW needs an embedding table");
}

CbowPredictor CbowPredictor::Train(const std::vector<LabeledExample>& train, int window,
                                   std::shared_ptr<const EmbeddingTable> embeddings,
                                   const text::StopwordSet* stopwords,
                                   const GbdtOptions& options, size_t* skipped,
                                   std::vector<std::string>* warnings) {
  if (window < 1) throw ConfigError("CBOW window must be at least 1");
  if (embeddings == nullptr) throw ConfigError("CBOW needs an embedding table");
  const text::StopwordSet& stop = stopwords != nullptr ? *stopwords : text::StopwordSet::Default();
  std::vector<std::vector<float>> features;
  std::vector<int> labels;
  size_t missing = 0;
  for (const LabeledExample& ex : train) {
    absl::StatusOr<std::vector<float>> f =
        CbowFeaturize(ex.post.text, ex.phrase, window, *embeddings, stop);
    if (!f.ok()) {
      ++missing;
      continue;
    }
    features.push_back(*std::move(f));
    labels.push_back(static_cast<int>(Index(ex.label)));
  }
  if (missing > 0) {
    const std::string w = "CBOW-" + std::to_string(window) + ": skipped " +
                          std::to_string(missing) + " training examples without the phrase";
    LogWarning(w);
    if (warnings != nullptr) warnings->push_back(w);
  }
  if (skipped != nullptr) *skipped = missing;
  GbdtModel model = TrainGbdt(features, labels, static_cast<int>(kNumLabels), options, warnings);
  return CbowPredictor(window, std::move(embeddings), &stop, std::move(model));
}

absl::StatusOr<Label> CbowPredictor::Predict(const LabeledExample& example) {
  absl::StatusOr<std::vector<float>> f =
      CbowFeaturize(example.post.text, example.phrase, window_, *embeddings_, *stopwords_);
  if (!f.ok()) return f.status();
  return LabelFromIndex(static_cast<size_t>(model_.Predict(*f)));
}

}  // namespace np2io
