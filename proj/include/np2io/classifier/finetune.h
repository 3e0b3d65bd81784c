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

#ifndef NP2IO_CLASSIFIER_FINETUNE_H_
#define NP2IO_CLASSIFIER_FINETUNE_H_

#include <functional>
#include <string>
#include <vector>

#include "np2io/classifier/checkpoint.h"
#include "np2io/classifier/registry.h"
#include "np2io/corpus/example.h"

namespace np2io {

struct PreparedExample {
  std::vector<int32_t> ids;
  EligibleTokenSet eligible;
  Label label = Label::kNa;
};

enum class PrepareStatus { kOk, kNoOccurrence, kTruncated };

// Tokenizes the post and computes the eligible tokens of the phrase.
PrepareStatus PrepareExample(const LabeledExample& example, const WordPieceTokenizer& tokenizer,
                             size_t max_len, PreparedExample* out);

struct FinetuneReport {
  size_t skipped_no_occurrence = 0;
  size_t skipped_truncated = 0;
  int epochs_run = 0;
  bool early_stopped = false;
  std::vector<std::string> warnings;
};

struct EpochSummary {
  int epoch = 0;  // 1-based
  double train_loss = 0;
  double validation_loss = 0;  // NaN without a validation set
};

using EpochCallback = std::function<void(const EpochSummary&)>;

// Fine-tunes the head and the top `trainable_layers` blocks with Adam on the
// mean of per-example eligible-token losses; returns the epoch with the lowest
// validation loss. Throws ConfigError for an empty or overlapping training
// set and DivergenceError on a non-finite loss.
Checkpoint Finetune(const std::vector<LabeledExample>& train,
                    const std::vector<LabeledExample>& validation, const TrainingConfig& config,
                    const BackboneRegistry& registry, FinetuneReport* report = nullptr,
                    const EpochCallback& on_epoch = {});

// Same, starting from an already loaded backbone.
Checkpoint FinetuneBackbone(Backbone backbone, const std::vector<LabeledExample>& train,
                            const std::vector<LabeledExample>& validation,
                            const TrainingConfig& config, FinetuneReport* report = nullptr,
                            const EpochCallback& on_epoch = {});

// Mean over examples of the per-example loss, evaluation mode.
double MeanExampleLoss(const ModelParams<float>& params,
                       const std::vector<PreparedExample>& examples);

// Share of eligible tokens whose argmax equals the gold label.
double EligibleTokenAccuracy(const TokenClassifier& model,
                             const std::vector<LabeledExample>& examples);

// SHA-256 over the serialized train and validation sets.
std::string DatasetFingerprint(const std::vector<LabeledExample>& train,
                               const std::vector<LabeledExample>& validation);

}  // namespace np2io

#endif  // NP2IO_CLASSIFIER_FINETUNE_H_
