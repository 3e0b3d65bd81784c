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

#ifndef NP2IO_CLASSIFIER_MODEL_CONFIG_H_
#define NP2IO_CLASSIFIER_MODEL_CONFIG_H_

#include <cstdint>
#include <string>

#include "json.hpp"

namespace np2io {

// DistilBERT-shaped encoder hyperparameters; field names follow the
// Hugging Face config.json keys.
struct EncoderConfig {
  int64_t vocab_size = 30522;
  int64_t dim = 768;
  int64_t n_layers = 6;
  int64_t n_heads = 12;
  int64_t hidden_dim = 3072;
  int64_t max_position_embeddings = 512;
  double dropout = 0.1;
  double attention_dropout = 0.1;
  double classifier_dropout = 0.1;
  double layer_norm_eps = 1e-12;

  int64_t head_dim() const { return dim / n_heads; }
  // Throws ConfigError for inconsistent shapes.
  void Validate() const;
  bool operator==(const EncoderConfig&) const = default;
};

nlohmann::json ToJson(const EncoderConfig& config);
// Accepts both our own layout and a Hugging Face DistilBERT config.json.
EncoderConfig EncoderConfigFromJson(const nlohmann::json& j);

}  // namespace np2io

#endif  // NP2IO_CLASSIFIER_MODEL_CONFIG_H_
