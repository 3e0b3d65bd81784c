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

#include "np2io/classifier/token_classifier.h"

#include <algorithm>

#include "np2io/common/errors.h"

namespace np2io {

TokenClassifier::TokenClassifier(ModelParams<float> params, WordPieceVocab vocab, size_t max_len)
    : params_(std::make_shared<const ModelParams<float>>(std::move(params))),
      tokenizer_(std::move(vocab)),
      max_len_(std::min<size_t>(max_len,
                                static_cast<size_t>(params_->config.max_position_embeddings))) {
  if (static_cast<int64_t>(tokenizer_.vocab().size()) != params_->config.vocab_size) {
    throw ConfigError("vocabulary has " + std::to_string(tokenizer_.vocab().size()) +
                      " entries but the encoder expects " +
                      std::to_string(params_->config.vocab_size));
  }
}

TokenizedPost TokenClassifier::Tokenize(std::string_view text) const {
  return tokenizer_.Tokenize(text, max_len_);
}

std::vector<PredictionVector> TokenClassifier::Predict(std::span<const int32_t> ids) const {
  if (ids.size() > max_len_) {
    throw ContractViolation("sequence of " + std::to_string(ids.size()) +
                            " tokens exceeds max_len " + std::to_string(max_len_));
  }
  const ForwardState<float> state = Forward(*params_, ids);
  // Softmax in double so each vector sums to one well within 1e-6.
  const Matrix<double> probs = SoftmaxRows<double>(state.logits.cast<double>());
  std::vector<PredictionVector> out(ids.size());
  for (size_t i = 0; i < ids.size(); ++i) {
    for (size_t c = 0; c < kNumLabels; ++c) out[i][c] = probs(static_cast<Eigen::Index>(i), c);
  }
  return out;
}

}  // namespace np2io
