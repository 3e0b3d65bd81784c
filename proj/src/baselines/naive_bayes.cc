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

#include "np2io/baselines/naive_bayes.h"

#include "json.hpp"
#include "np2io/common/errors.h"

namespace np2io {

text::Canonicalizer PhraseConditionalTable::canonicalizer() const {
  return lemmatized ? text::Canonicalizer::Lemmatized() : text::Canonicalizer::Surface();
}

PhraseConditionalTable TrainNaiveBayes(const std::vector<LabeledExample>& train, bool lemmatized) {
  PhraseConditionalTable table;
  table.lemmatized = lemmatized;
  const text::Canonicalizer canon = table.canonicalizer();
  for (const LabeledExample& ex : train) ++table.counts[canon(ex.phrase)][Index(ex.label)];
  return table;
}

std::string NaiveBayesToJson(const PhraseConditionalTable& table) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [phrase, c] : table.counts) {
    nlohmann::json row;
    for (Label l : kAllLabels) row[std::string(ToString(l))] = c[Index(l)];
    counts[phrase] = row;
  }
  return nlohmann::json{{"lemmatized", table.lemmatized}, {"counts", counts}}.dump(2) + "\n";
}

PhraseConditionalTable NaiveBayesFromJson(std::string_view json) {
  PhraseConditionalTable table;
  try {
    const auto j = nlohmann::json::parse(json);
    table.lemmatized = j.at("lemmatized").get<bool>();
    for (const auto& [phrase, row] : j.at("counts").items()) {
      LabelCounts c{};
      for (Label l : kAllLabels) {
        c[Index(l)] = row.at(std::string(ToString(l))).get<long>();
        if (c[Index(l)] < 0) throw ConfigError("negative count for '" + phrase + "'");
      }
      table.counts[phrase] = c;
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("naive Bayes table: ") + e.what());
  }
  return table;
}

NaiveBayesPredictor::NaiveBayesPredictor(PhraseConditionalTable table, uint64_t seed)
    : table_(std::move(table)), canon_(table_.canonicalizer()), rng_(seed) {}

absl::StatusOr<Label> NaiveBayesPredictor::Predict(const LabeledExample& example) {
  return PredictPhrase(example.phrase);
}

Label NaiveBayesPredictor::PredictPhrase(std::string_view phrase) {
  const auto it = table_.counts.find(canon_(phrase));
  if (it == table_.counts.end()) {
    ++unseen_;
    return LabelFromIndex(rng_.UniformIndex(kNumLabels));
  }
  bool tie = false;
  const Label out = ArgmaxWithTieBreak(it->second, &tie);
  ties_ += tie;
  return out;
}

}  // namespace np2io
