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

#ifndef NP2IO_BASELINES_CBOW_H_
#define NP2IO_BASELINES_CBOW_H_

#include <memory>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "absl/status/statusor.h"
#include "np2io/baselines/embeddings.h"
#include "np2io/baselines/gbdt.h"
#include "np2io/baselines/predictor.h"
#include "np2io/text/stopwords.h"

namespace np2io {

// Averaged embedding of the context around the first occurrence of `phrase`.
// Windowing: the w whitespace words before and after the occurrence (words
// overlapping it are part of the phrase). Each window word is trimmed of
// edge punctuation and dropped if empty or a stopword, then lemmatized.
// Words without a vector are skipped; an empty result is the zero vector.
// NotFound when the phrase does not occur; InvalidArgument when w < 1.
absl::StatusOr<std::vector<float>> CbowFeaturize(std::string_view post, std::string_view phrase,
                                                 int window, const EmbeddingTable& embeddings,
                                                 const text::StopwordSet& stopwords);

// The lemmatized, stopword-filtered window words, before embedding lookup.
absl::StatusOr<std::vector<std::string>> CbowContextWords(std::string_view post,
                                                          std::string_view phrase, int window,
                                                          const text::StopwordSet& stopwords);

// Every word a CBOW window could look up in `examples`; used to restrict
// embedding loading.
std::unordered_set<std::string> CbowVocabulary(const std::vector<LabeledExample>& examples,
                                               const text::StopwordSet& stopwords);

// CBOW-w: featurize, then classify with boosted trees.
class CbowPredictor : public Predictor {
 public:
  CbowPredictor(int window, std::shared_ptr<const EmbeddingTable> embeddings,
                const text::StopwordSet* stopwords, GbdtModel model);

  // Training examples whose phrase is absent are skipped and counted.
  static CbowPredictor Train(const std::vector<LabeledExample>& train, int window,
                             std::shared_ptr<const EmbeddingTable> embeddings,
                             const text::StopwordSet* stopwords, const GbdtOptions& options = {},
                             size_t* skipped = nullptr,
                             std::vector<std::string>* warnings = nullptr);

  std::string name() const override { return "CBOW-" + std::to_string(window_); }
  absl::StatusOr<Label> Predict(const LabeledExample& example) override;

  int window() const { return window_; }
  const GbdtModel& model() const { return model_; }

 private:
  int window_;
  std::shared_ptr<const EmbeddingTable> embeddings_;
  const text::StopwordSet* stopwords_;
  GbdtModel model_;
};

}  // namespace np2io

#endif  // NP2IO_BASELINES_CBOW_H_
