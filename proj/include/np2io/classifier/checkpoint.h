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

#ifndef NP2IO_CLASSIFIER_CHECKPOINT_H_
#define NP2IO_CLASSIFIER_CHECKPOINT_H_

#include <filesystem>
#include <string>
#include <vector>

#include "np2io/classifier/network.h"
#include "np2io/classifier/token_classifier.h"
#include "np2io/classifier/training_config.h"
#include "np2io/spans/tokenizer.h"

namespace np2io {

struct Checkpoint {
  TrainingConfig config;
  ModelParams<float> params;
  WordPieceVocab vocab;
  std::vector<double> train_loss;       // per epoch
  std::vector<double> validation_loss;  // per epoch
  int best_epoch = -1;                  // 0-based index into the curves
  std::string dataset_fingerprint;
  size_t skipped_examples = 0;

  TokenClassifier ToClassifier() const;
};

inline constexpr char kManifestFile[] = "manifest.json";
inline constexpr char kWeightsFile[] = "model.safetensors";
inline constexpr char kVocabFile[] = "vocab.txt";

// Writes weights, vocabulary and a manifest with per-file SHA-256 digests.
// Output bytes depend only on the checkpoint contents.
void SaveCheckpoint(const Checkpoint& checkpoint, const std::filesystem::path& dir);
// Throws IoError when the manifest is missing or a file does not match it;
// the message lists each mismatching entry.
Checkpoint LoadCheckpoint(const std::filesystem::path& dir);

// Per-epoch losses as CSV: epoch,train_loss,validation_loss.
std::string LossCurveCsv(const Checkpoint& checkpoint);

}  // namespace np2io

#endif  // NP2IO_CLASSIFIER_CHECKPOINT_H_
