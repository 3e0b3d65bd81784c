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

#include "np2io/classifier/registry.h"

#include <charconv>

#include "json.hpp"
#include "np2io/classifier/model_config.h"
#include "np2io/common/errors.h"
#include "np2io/common/files.h"
#include "np2io/common/log.h"

namespace np2io {
namespace {

template <typename T>
T ParseNumber(std::string_view key, std::string_view value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError("scratch backbone: bad value for " + std::string(key) + ": '" +
                      std::string(value) + "'");
  }
  return out;
}

}  // namespace

std::optional<ScratchSpec> ParseScratchId(std::string_view id) {
  constexpr std::string_view kPrefix = "scratch";
  if (id.substr(0, kPrefix.size()) != kPrefix) return std::nullopt;
  std::string_view rest = id.substr(kPrefix.size());
  ScratchSpec spec;
  if (rest.empty()) return spec;
  if (rest.front() != ':') return std::nullopt;
  rest.remove_prefix(1);
  while (!rest.empty()) {
    const size_t comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view() : rest.substr(comma + 1);
    const size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("scratch backbone: expected key=value, got '" + std::string(item) + "'");
    }
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    if (key == "d") {
      spec.dim = ParseNumber<int64_t>(key, value);
    } else if (key == "l") {
      spec.layers = ParseNumber<int64_t>(key, value);
    } else if (key == "h") {
      spec.heads = ParseNumber<int64_t>(key, value);
    } else if (key == "ff") {
      spec.ff = ParseNumber<int64_t>(key, value);
    } else if (key == "pos") {
      spec.positions = ParseNumber<int64_t>(key, value);
    } else if (key == "vocab") {
      spec.vocab = ParseNumber<size_t>(key, value);
    } else if (key == "min") {
      spec.min_count = ParseNumber<size_t>(key, value);
    } else if (key == "dropout") {
      spec.dropout = std::stod(std::string(value));
    } else {
      throw ConfigError("scratch backbone: unknown key '" + std::string(key) + "'");
    }
  }
  return spec;
}

BackboneRegistry::BackboneRegistry(std::filesystem::path root) : root_(std::move(root)) {}

std::filesystem::path BackboneRegistry::Locate(const std::string& id) const {
  std::vector<std::filesystem::path> candidates;
  if (!root_.empty()) candidates.push_back(root_ / id);
  candidates.emplace_back(id);
  for (const auto& dir : candidates) {
    if (std::filesystem::is_directory(dir)) return dir;
  }
  throw ConfigError("backbone '" + id + "' not found" +
                    (root_.empty() ? std::string(" (no registry root configured)")
                                   : " under registry root " + root_.string()));
}

Backbone BackboneRegistry::Load(const std::string& id, const std::vector<std::string>& corpus,
                                uint64_t seed) const {
  if (const auto spec = ParseScratchId(id)) {
    if (corpus.empty()) throw ConfigError("scratch backbone needs training text for its vocabulary");
    WordPieceVocab vocab = BuildWordPieceVocab(corpus, {spec->min_count, spec->vocab});
    EncoderConfig config;
    config.vocab_size = static_cast<int64_t>(vocab.size());
    config.dim = spec->dim;
    config.n_layers = spec->layers;
    config.n_heads = spec->heads;
    config.hidden_dim = spec->ff;
    config.max_position_embeddings = spec->positions;
    config.dropout = spec->dropout;
    config.attention_dropout = spec->dropout;
    config.classifier_dropout = spec->dropout;
    return {id, InitModelParams<float>(config, seed, /*with_mlm_head=*/true), std::move(vocab),
            false};
  }
  const std::filesystem::path dir = Locate(id);
  nlohmann::json config_json;
  try {
    config_json = nlohmann::json::parse(ReadFile(dir / "config.json"));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("backbone '" + id + "': bad config.json: " + e.what());
  }
  const EncoderConfig config = EncoderConfigFromJson(config_json);
  if (!std::filesystem::exists(dir / "model.safetensors")) {
    throw ConfigError("backbone '" + id + "': model.safetensors not found in " + dir.string() +
                      " (other weight formats are not read)");
  }
  WordPieceVocab vocab = WordPieceVocab::LoadFile(dir / "vocab.txt");
  if (static_cast<int64_t>(vocab.size()) != config.vocab_size) {
    throw ConfigError("backbone '" + id + "': vocab.txt has " + std::to_string(vocab.size()) +
                      " entries, config says " + std::to_string(config.vocab_size));
  }
  bool head_initialized = false;
  ModelParams<float> params = ParamsFromTensors<float>(
      config, ReadSafetensors(dir / "model.safetensors"), seed, &head_initialized);
  if (head_initialized) LogInfo("backbone '" + id + "': classifier head freshly initialized");
  return {id, std::move(params), std::move(vocab), true};
}

}  // namespace np2io
