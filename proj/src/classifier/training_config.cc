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

#include "np2io/classifier/training_config.h"

#include <algorithm>
#include <cmath>

#include "np2io/common/errors.h"

namespace np2io {

void TrainingConfig::Validate() const {
  if (backbone_id.empty()) throw ConfigError("training: backbone_id is empty");
  if (batch_size < 1) throw ConfigError("training: batch_size must be >= 1");
  if (trainable_layers < 0) throw ConfigError("training: trainable_layers must be >= 0");
  if (!(learning_rate > 0) || !std::isfinite(learning_rate)) {
    throw ConfigError("training: learning_rate must be a positive number");
  }
  if (max_len < 2) throw ConfigError("training: max_len must be >= 2");
  if (epochs < 1) throw ConfigError("training: epochs must be >= 1");
  if (patience < 1) throw ConfigError("training: patience must be >= 1");
  if (!grid_mode) return;
  auto in = [](const auto& grid, auto v) {
    return std::find(std::begin(grid), std::end(grid), v) != std::end(grid);
  };
  if (!in(kGridBatchSizes, batch_size)) {
    throw ConfigError("training: batch_size " + std::to_string(batch_size) + " not in grid");
  }
  if (!in(kGridTrainableLayers, trainable_layers)) {
    throw ConfigError("training: trainable_layers " + std::to_string(trainable_layers) +
                      " not in grid");
  }
  const bool lr_ok = std::any_of(std::begin(kGridLearningRates), std::end(kGridLearningRates),
                                 [&](double g) { return std::abs(g - learning_rate) <= 1e-12 * g; });
  if (!lr_ok) throw ConfigError("training: learning_rate not in grid");
}

nlohmann::json ToJson(const TrainingConfig& c) {
  return {{"backbone_id", c.backbone_id},   {"batch_size", c.batch_size},
          {"trainable_layers", c.trainable_layers}, {"learning_rate", c.learning_rate},
          {"max_len", c.max_len},           {"epochs", c.epochs},
          {"patience", c.patience},         {"seed", c.seed},
          {"grid_mode", c.grid_mode}};
}

TrainingConfig TrainingConfigFromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("training config must be an object");
  TrainingConfig c;
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "backbone_id") {
        c.backbone_id = value.get<std::string>();
      } else if (key == "batch_size") {
        c.batch_size = value.get<int>();
      } else if (key == "trainable_layers") {
        c.trainable_layers = value.get<int>();
      } else if (key == "learning_rate") {
        if (!value.is_number()) throw ConfigError("training: learning_rate must be a number");
        c.learning_rate = value.get<double>();
      } else if (key == "max_len") {
        c.max_len = value.get<int>();
      } else if (key == "epochs") {
        c.epochs = value.get<int>();
      } else if (key == "patience") {
        c.patience = value.get<int>();
      } else if (key == "seed") {
        c.seed = value.get<uint64_t>();
      } else if (key == "grid_mode") {
        c.grid_mode = value.get<bool>();
      } else {
        throw ConfigError("training: unknown key '" + key + "'");
      }
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("training: bad value for '" + key + "': " + e.what());
    }
  }
  c.Validate();
  return c;
}

}  // namespace np2io
