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

#include "np2io/inference/constant_model.h"

#include "np2io/common/errors.h"

namespace np2io {

ConstantPhraseModel::ConstantPhraseModel(PredictionVector probs, size_t max_len)
    : probs_(probs), max_len_(max_len) {
  if (max_len_ < 2) throw ContractViolation("max_len must be at least 2");
}

ConstantPhraseModel ConstantPhraseModel::Always(Label label) {
  PredictionVector p{};
  p[Index(label)] = 1.0;
  return ConstantPhraseModel(p);
}

TokenizedPost ConstantPhraseModel::Tokenize(std::string_view text) const {
  TokenizedPost out;
  out.tokens.push_back({0, 0, std::nullopt});
  for (const auto& [word, span] : WordPieceTokenizer::PreTokenize(text)) {
    if (out.tokens.size() + 1 >= max_len_) {
      out.truncated = true;
      break;
    }
    out.tokens.push_back({out.tokens.size(), 1, span});
  }
  out.tokens.push_back({out.tokens.size(), 0, std::nullopt});
  return out;
}

std::vector<PredictionVector> ConstantPhraseModel::Predict(std::span<const int32_t> ids) const {
  if (ids.size() > max_len_) throw ContractViolation("sequence exceeds max_len");
  return std::vector<PredictionVector>(ids.size(), probs_);
}

}  // namespace np2io
