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

#ifndef NP2IO_CLASSIFIER_TOKEN_CLASSIFIER_H_
#define NP2IO_CLASSIFIER_TOKEN_CLASSIFIER_H_

#include <array>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "np2io/classifier/network.h"
#include "np2io/classifier/phrase_model.h"
#include "np2io/spans/tokenizer.h"

namespace np2io {

// Immutable inference wrapper: tokenizer plus encoder and head, evaluation mode only.
class TokenClassifier : public PhraseModel {
 public:
  TokenClassifier(ModelParams<float> params, WordPieceVocab vocab, size_t max_len);

  // Truncates to max_len() tokens.
  TokenizedPost Tokenize(std::string_view text) const override;
  // One probability vector per token, synthetic tokens included. Throws
  // ContractViolation when ids exceed max_len().
  std::vector<PredictionVector> Predict(std::span<const int32_t> ids) const override;

  const ModelParams<float>& params() const { return *params_; }
  const WordPieceTokenizer& tokenizer() const { return tokenizer_; }
  size_t max_len() const { return max_len_; }

 private:
  std::shared_ptr<const ModelParams<float>> params_;
  WordPieceTokenizer tokenizer_;
  size_t max_len_;
};

}  // namespace np2io

#endif  // NP2IO_CLASSIFIER_TOKEN_CLASSIFIER_H_
