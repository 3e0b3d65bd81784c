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

#ifndef NP2IO_CLASSIFIER_TRAINING_CONFIG_H_
#define NP2IO_CLASSIFIER_TRAINING_CONFIG_H_

#include <cstdint>
#include <string>

#include "json.hpp"

namespace np2io {

struct TrainingConfig {
  std::string backbone_id = "distilbert-base-uncased";
  int batch_size = 64;
  int trainable_layers = 2;
  double learning_rate = 1e-6;
  int max_len = 512;
  int epochs = 10;
  int patience = 3;
  uint64_t seed = 0;
  // Restricts batch size, layers and learning rate to the search grid.
  bool grid_mode = false;

  // Throws ConfigError.
  void Validate() const;
  bool operator==(const TrainingConfig&) const = default;
};

inline constexpr int kGridBatchSizes[] = {32, 64, 128};
inline constexpr int kGridTrainableLayers[] = {0, 1, 2, 5};
inline constexpr double kGridLearningRates[] = {1e-7, 1e-6, 1e-5, 1e-4};

nlohmann::json ToJson(const TrainingConfig& config);
// Unknown keys are rejected so typos surface as configuration errors.
TrainingConfig TrainingConfigFromJson(const nlohmann::json& j);

}  // namespace np2io

#endif  // NP2IO_CLASSIFIER_TRAINING_CONFIG_H_
