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

#ifndef NP2IO_CLASSIFIER_REGISTRY_H_
#define NP2IO_CLASSIFIER_REGISTRY_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "np2io/classifier/network.h"
#include "np2io/spans/tokenizer.h"

namespace np2io {

struct Backbone {
  std::string id;
  ModelParams<float> params;
  WordPieceVocab vocab;
  bool pretrained = false;
};

// Randomly initialized encoder whose vocabulary is built from the training
// posts: "scratch" or "scratch:d=64,l=2,h=4,ff=256,pos=512,vocab=8000,min=2".
struct ScratchSpec {
  int64_t dim = 64;
  int64_t layers = 2;
  int64_t heads = 4;
  int64_t ff = 256;
  int64_t positions = 512;
  size_t vocab = 8000;
  size_t min_count = 2;
  double dropout = 0.1;
};

// nullopt when `id` is not a scratch id; ConfigError when it is malformed.
std::optional<ScratchSpec> ParseScratchId(std::string_view id);

// Resolves backbone ids. Pretrained ids name a directory (under the root, or
// an explicit path) holding config.json, vocab.txt and model.safetensors in
// the Hugging Face DistilBERT layout.
class BackboneRegistry {
 public:
  explicit BackboneRegistry(std::filesystem::path root = {});

  // `corpus` feeds vocabulary construction for scratch backbones only.
  Backbone Load(const std::string& id, const std::vector<std::string>& corpus,
                uint64_t seed) const;
  // Directory for a pretrained id; ConfigError when absent.
  std::filesystem::path Locate(const std::string& id) const;

 private:
  std::filesystem::path root_;
};

}  // namespace np2io

#endif  // NP2IO_CLASSIFIER_REGISTRY_H_
