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

#ifndef NP2IO_EVALUATION_BENCHMARK_H_
#define NP2IO_EVALUATION_BENCHMARK_H_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "np2io/baselines/predictor.h"
#include "np2io/classifier/phrase_model.h"
#include "np2io/corpus/split.h"
#include "np2io/evaluation/metrics.h"
#include "np2io/text/stopwords.h"

namespace np2io {

// Predictor view of a span classifier: majority vote over the phrase's
// eligible tokens. Absent or truncated phrases surface as errors.
class PhraseModelPredictor : public Predictor {
 public:
  PhraseModelPredictor(std::string name, std::shared_ptr<const PhraseModel> model)
      : name_(std::move(name)), model_(std::move(model)) {}
  std::string name() const override { return name_; }
  absl::StatusOr<Label> Predict(const LabeledExample& example) override;

 private:
  std::string name_;
  std::shared_ptr<const PhraseModel> model_;
};

struct BenchmarkRow {
  std::string model;
  MetricsReport test;
  std::optional<MetricsReport> zero_shot;  // absent when disabled or the subset is empty
  size_t errors = 0;                       // examples scored as NA after a predictor error
  std::string first_error;
};

struct BenchmarkResult {
  std::vector<BenchmarkRow> rows;
  size_t test_size = 0;
  size_t zero_shot_size = 0;
};

// Each model predicts every test example once, in order; the zero-shot
// metrics reuse those predictions restricted to the zero-shot subset, whose
// canonical phrases drop `stopwords` (the pinned default list when null).
BenchmarkResult BenchmarkAll(const std::vector<Predictor*>& models, const DatasetSplit& split,
                             bool zero_shot = true, const text::StopwordSet* stopwords = nullptr);

// Header: model,acc,p,r,f1,f1w,zs_acc,zs_p,zs_r,zs_f1,zs_f1w. Values carry
// three decimals; zero-shot cells are empty when not computed.
std::string BenchmarkCsv(const BenchmarkResult& result);
// Fixed-width text table for terminals.
std::string BenchmarkTable(const BenchmarkResult& result);

}  // namespace np2io

#endif  // NP2IO_EVALUATION_BENCHMARK_H_
