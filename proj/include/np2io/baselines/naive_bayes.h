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

#ifndef NP2IO_BASELINES_NAIVE_BAYES_H_
#define NP2IO_BASELINES_NAIVE_BAYES_H_

#include <map>
#include <string>
#include <vector>

#include "np2io/baselines/predictor.h"
#include "np2io/common/rng.h"
#include "np2io/text/canonical.h"

namespace np2io {

// Label counts per canonical phrase. Canonical form is the lowercased phrase,
// lemmatized per word when `lemmatized` is set.
struct PhraseConditionalTable {
  bool lemmatized = false;
  std::map<std::string, LabelCounts> counts;

  text::Canonicalizer canonicalizer() const;
  bool operator==(const PhraseConditionalTable&) const = default;
};

PhraseConditionalTable TrainNaiveBayes(const std::vector<LabeledExample>& train, bool lemmatized);

// {"lemmatized": bool, "counts": {phrase: {"insider": n, "outsider": n, "na": n}}}
std::string NaiveBayesToJson(const PhraseConditionalTable& table);
// Throws ConfigError on malformed input.
PhraseConditionalTable NaiveBayesFromJson(std::string_view json);

// NB / NB-L. Seen phrases get their most frequent label (count ties broken
// OUTSIDER, INSIDER, NA); unseen phrases a uniform draw from the seed stream.
// Only the phrase is consulted, never the post.
class NaiveBayesPredictor : public Predictor {
 public:
  NaiveBayesPredictor(PhraseConditionalTable table, uint64_t seed);
  std::string name() const override { return table_.lemmatized ? "NB-L" : "NB"; }
  absl::StatusOr<Label> Predict(const LabeledExample& example) override;
  Label PredictPhrase(std::string_view phrase);

  size_t unseen() const { return unseen_; }
  size_t ties() const { return ties_; }

 private:
  PhraseConditionalTable table_;
  text::Canonicalizer canon_;
  Rng rng_;
  size_t unseen_ = 0;
  size_t ties_ = 0;
};

}  // namespace np2io

#endif  // NP2IO_BASELINES_NAIVE_BAYES_H_
