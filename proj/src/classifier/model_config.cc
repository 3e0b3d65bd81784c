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

#include "np2io/classifier/model_config.h"

#include "np2io/common/errors.h"

namespace np2io {

void EncoderConfig::Validate() const {
  if (vocab_size <= 0 || dim <= 0 || n_layers < 0 || n_heads <= 0 || hidden_dim <= 0 ||
      max_position_embeddings <= 0) {
    throw ConfigError("encoder config: sizes must be positive");
  }
  if (dim % n_heads != 0) {
    throw ConfigError("encoder config: dim " + std::to_string(dim) + " not divisible by n_heads " +
                      std::to_string(n_heads));
  }
  for (double p : {dropout, attention_dropout, classifier_dropout}) {
    if (p < 0.0 || p >= 1.0) throw ConfigError("encoder config: dropout must be in [0, 1)");
  }
}

nlohmann::json ToJson(const EncoderConfig& c) {
  return {{"model_type", "distilbert"},
          {"vocab_size", c.vocab_size},
          {"dim", c.dim},
          {"n_layers", c.n_layers},
          {"n_heads", c.n_heads},
          {"hidden_dim", c.hidden_dim},
          {"max_position_embeddings", c.max_position_embeddings},
          {"dropout", c.dropout},
          {"attention_dropout", c.attention_dropout},
          {"classifier_dropout", c.classifier_dropout},
          {"layer_norm_eps", c.layer_norm_eps}};
}

EncoderConfig EncoderConfigFromJson(const nlohmann::json& j) {
  const std::string type = j.value("model_type", "distilbert");
  if (type != "distilbert") {
    throw ConfigError("unsupported backbone family '" + type + "' (only distilbert is supported)");
  }
  if (j.contains("activation") && j["activation"] != "gelu") {
    throw ConfigError("unsupported activation " + j["activation"].dump());
  }
  EncoderConfig c;
  try {
    c.vocab_size = j.at("vocab_size").get<int64_t>();
    c.dim = j.value("dim", c.dim);
    c.n_layers = j.value("n_layers", c.n_layers);
    c.n_heads = j.value("n_heads", c.n_heads);
    c.hidden_dim = j.value("hidden_dim", c.hidden_dim);
    c.max_position_embeddings = j.value("max_position_embeddings", c.max_position_embeddings);
    c.dropout = j.value("dropout", c.dropout);
    c.attention_dropout = j.value("attention_dropout", c.attention_dropout);
    // The token-classification head reuses the hidden dropout unless overridden.
    c.classifier_dropout = j.value("classifier_dropout", c.dropout);
    c.layer_norm_eps = j.value("layer_norm_eps", c.layer_norm_eps);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("encoder config: ") + e.what());
  }
  c.Validate();
  return c;
}

}  // namespace np2io
