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

#ifndef NP2IO_CLASSIFIER_PHRASE_MODEL_H_
#define NP2IO_CLASSIFIER_PHRASE_MODEL_H_

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "np2io/corpus/label.h"
#include "np2io/spans/tokenizer.h"

namespace np2io {

using PredictionVector = std::array<double, kNumLabels>;

// What span-level inference needs from a token classifier. Implementations
// must be safe for concurrent const calls.
class PhraseModel {
 public:
  virtual ~PhraseModel() = default;
  // Tokens of `text`, already truncated to the model's window.
  virtual TokenizedPost Tokenize(std::string_view text) const = 0;
  // One probability vector per token id.
  virtual std::vector<PredictionVector> Predict(std::span<const int32_t> ids) const = 0;
};

}  // namespace np2io

#endif  // NP2IO_CLASSIFIER_PHRASE_MODEL_H_
