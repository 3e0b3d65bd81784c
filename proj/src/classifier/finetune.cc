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

#include "np2io/classifier/finetune.h"

#include <cmath>
#include <limits>
#include <set>

#include "np2io/classifier/optimizer.h"
#include "np2io/common/errors.h"
#include "np2io/common/files.h"
#include "np2io/common/log.h"
#include "np2io/corpus/dataset_io.h"
#include "np2io/spans/occurrences.h"

namespace np2io {
namespace {

std::vector<PreparedExample> PrepareAll(const std::vector<LabeledExample>& examples,
                                        const WordPieceTokenizer& tokenizer, size_t max_len,
                                        FinetuneReport& report) {
  std::vector<PreparedExample> out;
  out.reserve(examples.size());
  for (const LabeledExample& ex : examples) {
    PreparedExample p;
    switch (PrepareExample(ex, tokenizer, max_len, &p)) {
      case PrepareStatus::kOk:
        out.push_back(std::move(p));
        break;
      case PrepareStatus::kNoOccurrence:
        ++report.skipped_no_occurrence;
        break;
      case PrepareStatus::kTruncated:
        ++report.skipped_truncated;
        break;
    }
  }
  return out;
}

void CheckFinite(double loss, int epoch, size_t batch) {
  if (!std::isfinite(loss)) {
    throw DivergenceError("training diverged: loss " + std::to_string(loss) + " at epoch " +
                          std::to_string(epoch) + ", batch " + std::to_string(batch) +
                          "; lower the learning rate");
  }
}

}  // namespace

PrepareStatus PrepareExample(const LabeledExample& example, const WordPieceTokenizer& tokenizer,
                             size_t max_len, PreparedExample* out) {
  const std::vector<CharSpan> occurrences = LocatePhrase(example.post.text, example.phrase);
  if (occurrences.empty()) return PrepareStatus::kNoOccurrence;
  const TokenizedPost tokens = tokenizer.Tokenize(example.post.text, max_len);
  EligibleTokenSet eligible = EligibleTokens(tokens.tokens, occurrences);
  if (eligible.empty()) return PrepareStatus::kTruncated;
  out->ids = tokens.ids();
  out->eligible = std::move(eligible);
  out->label = example.label;
  return PrepareStatus::kOk;
}

double MeanExampleLoss(const ModelParams<float>& params,
                       const std::vector<PreparedExample>& examples) {
  if (examples.empty()) return std::numeric_limits<double>::quiet_NaN();
  double total = 0;
  for (const PreparedExample& ex : examples) {
    const ForwardState<float> state = Forward(params, ex.ids);
    total += EligibleCrossEntropy<double>(state.logits.cast<double>(), ex.eligible, ex.label,
                                          nullptr);
  }
  return total / static_cast<double>(examples.size());
}

double EligibleTokenAccuracy(const TokenClassifier& model,
                             const std::vector<LabeledExample>& examples) {
  size_t correct = 0;
  size_t total = 0;
  for (const LabeledExample& ex : examples) {
    PreparedExample p;
    if (PrepareExample(ex, model.tokenizer(), model.max_len(), &p) != PrepareStatus::kOk) continue;
    const auto probs = model.Predict(p.ids);
    for (size_t i : p.eligible) {
      size_t best = 0;
      for (size_t c = 1; c < kNumLabels; ++c) {
        if (probs[i][c] > probs[i][best]) best = c;
      }
      correct += best == static_cast<size_t>(Index(ex.label));
      ++total;
    }
  }
  return total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total);
}

std::string DatasetFingerprint(const std::vector<LabeledExample>& train,
                               const std::vector<LabeledExample>& validation) {
  return Sha256Hex(SerializeDataset(train, DatasetFormat::kJsonl) + "\x1e" +
                   SerializeDataset(validation, DatasetFormat::kJsonl));
}

Checkpoint Finetune(const std::vector<LabeledExample>& train,
                    const std::vector<LabeledExample>& validation, const TrainingConfig& config,
                    const BackboneRegistry& registry, FinetuneReport* report,
                    const EpochCallback& on_epoch) {
  config.Validate();
  if (train.empty()) throw ConfigError("fine-tuning needs a non-empty training set");
  std::vector<std::string> corpus;
  corpus.reserve(train.size());
  for (const auto& ex : train) corpus.push_back(ex.post.text);
  Backbone backbone = registry.Load(config.backbone_id, corpus, DeriveSeed(config.seed, {1}));
  return FinetuneBackbone(std::move(backbone), train, validation, config, report, on_epoch);
}

Checkpoint FinetuneBackbone(Backbone backbone, const std::vector<LabeledExample>& train,
                            const std::vector<LabeledExample>& validation,
                            const TrainingConfig& config, FinetuneReport* report,
                            const EpochCallback& on_epoch) {
  config.Validate();
  if (train.empty()) throw ConfigError("fine-tuning needs a non-empty training set");
  {
    std::set<ExampleKey> train_keys;
    for (const auto& ex : train) train_keys.insert(KeyOf(ex));
    for (const auto& ex : validation) {
      if (train_keys.contains(KeyOf(ex))) {
        throw ConfigError("training and validation sets overlap (post " + ex.post.id + ")");
      }
    }
  }
  const int layers = static_cast<int>(backbone.params.blocks.size());
  if (config.trainable_layers > layers) {
    throw ConfigError("trainable_layers " + std::to_string(config.trainable_layers) +
                      " exceeds the backbone's " + std::to_string(layers) + " blocks");
  }
  FinetuneReport local_report;
  FinetuneReport& rep = report != nullptr ? *report : local_report;
  rep = FinetuneReport{};

  const size_t max_len = std::min<size_t>(
      static_cast<size_t>(config.max_len),
      static_cast<size_t>(backbone.params.config.max_position_embeddings));
  const WordPieceTokenizer tokenizer(backbone.vocab);
  const std::vector<PreparedExample> train_set = PrepareAll(train, tokenizer, max_len, rep);
  const size_t train_skipped = rep.skipped_no_occurrence + rep.skipped_truncated;
  const std::vector<PreparedExample> val_set = PrepareAll(validation, tokenizer, max_len, rep);
  if (rep.skipped_truncated > 0) {
    rep.warnings.push_back(std::to_string(rep.skipped_truncated) +
                           " examples skipped: phrase lies beyond the truncation point");
  }
  if (rep.skipped_no_occurrence > 0) {
    rep.warnings.push_back(std::to_string(rep.skipped_no_occurrence) +
                           " examples skipped: phrase not found in post");
  }
  if (train_set.empty()) throw ConfigError("no trainable examples after tokenization");
  if (val_set.empty()) {
    rep.warnings.push_back("no validation examples; model selection uses the training loss");
  }
  for (const auto& w : rep.warnings) LogWarning(w);

  ModelParams<float>& params = backbone.params;
  const int k = config.trainable_layers;
  Adam<float> adam(config.learning_rate);
  Rng dropout_rng(DeriveSeed(config.seed, {2}));
  Rng shuffle_rng(DeriveSeed(config.seed, {3}));

  Checkpoint best;
  best.config = config;
  best.vocab = backbone.vocab;
  best.dataset_fingerprint = DatasetFingerprint(train, validation);
  best.skipped_examples = train_skipped;
  double best_loss = std::numeric_limits<double>::infinity();
  int since_best = 0;
  std::vector<size_t> order(train_set.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    shuffle_rng.Shuffle(std::span<size_t>(order));
    double epoch_loss = 0;
    size_t batch_index = 0;
    for (size_t start = 0; start < order.size(); start += config.batch_size, ++batch_index) {
      const size_t end = std::min(order.size(), start + static_cast<size_t>(config.batch_size));
      const float scale = 1.0f / static_cast<float>(end - start);
      TrainableGrads<float> grads = ZeroGrads(params, k);
      for (size_t b = start; b < end; ++b) {
        const PreparedExample& ex = train_set[order[b]];
        ForwardOptions options;
        options.dropout_rng = &dropout_rng;
        options.cache_layers = k;
        const ForwardState<float> state = Forward(params, ex.ids, options);
        Matrix<float> dlogits;
        const double loss = EligibleCrossEntropy(state.logits, ex.eligible, ex.label, &dlogits);
        CheckFinite(loss, epoch + 1, batch_index);
        epoch_loss += loss;
        dlogits *= scale;
        Backward(params, state, dlogits, grads);
      }
      adam.Step(TrainableViews(params, k), GradViews(grads, layers - k));
    }
    const double train_loss = epoch_loss / static_cast<double>(train_set.size());
    const double val_loss = MeanExampleLoss(params, val_set);
    if (!val_set.empty()) CheckFinite(val_loss, epoch + 1, batch_index);
    best.train_loss.push_back(train_loss);
    if (!val_set.empty()) best.validation_loss.push_back(val_loss);
    rep.epochs_run = epoch + 1;
    if (on_epoch) on_epoch({epoch + 1, train_loss, val_loss});
    LogInfo("epoch " + std::to_string(epoch + 1) + ": train loss " + std::to_string(train_loss) +
            ", validation loss " + std::to_string(val_loss));
    const double selection = val_set.empty() ? train_loss : val_loss;
    if (selection < best_loss) {
      best_loss = selection;
      best.best_epoch = epoch;
      best.params = params;
      since_best = 0;
    } else if (++since_best >= config.patience) {
      rep.early_stopped = true;
      break;
    }
  }
  return best;
}

}  // namespace np2io
