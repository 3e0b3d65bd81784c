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

#ifndef NP2IO_INFERENCE_CONSTANT_MODEL_H_
#define NP2IO_INFERENCE_CONSTANT_MODEL_H_

#include "np2io/classifier/phrase_model.h"

namespace np2io {

// Gives every token the same probabilities. Tokens are the pre-tokenizer's
// words, so spans line up with the text without a vocabulary.
class ConstantPhraseModel : public PhraseModel {
 public:
  explicit ConstantPhraseModel(PredictionVector probs, size_t max_len = kDefaultMaxLen);
  // Probability one on `label`.
  static ConstantPhraseModel Always(Label label);

  TokenizedPost Tokenize(std::string_view text) const override;
  std::vector<PredictionVector> Predict(std::span<const int32_t> ids) const override;

 private:
  PredictionVector probs_;
  size_t max_len_;
};

}  // namespace np2io

#endif  // NP2IO_INFERENCE_CONSTANT_MODEL_H_
