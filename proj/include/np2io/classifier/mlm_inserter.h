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

#ifndef NP2IO_CLASSIFIER_MLM_INSERTER_H_
#define NP2IO_CLASSIFIER_MLM_INSERTER_H_

#include <memory>

#include "np2io/classifier/network.h"
#include "np2io/corpus/augment.h"
#include "np2io/spans/tokenizer.h"

namespace np2io {

struct MlmInsertOptions {
  double fraction = 0.1;  // insertions per whitespace word
  size_t min_insertions = 1;
  size_t max_insertions = 10;
  size_t top_k = 20;  // candidates sampled in proportion to their probability
  size_t max_len = 512;
};

// Contextual insertion: places a mask token at a word boundary, asks the
// masked-LM head for whole-word candidates and inserts a sampled one.
// Never touches existing characters or the protected spans.
class MaskedLmInserter : public InsertionAugmenter {
 public:
  // Throws ConfigError when the backbone lacks a masked-LM head or [MASK].
  MaskedLmInserter(std::shared_ptr<const ModelParams<float>> params, WordPieceVocab vocab,
                   MlmInsertOptions options = {});

  AugmentedText Augment(std::string_view text, std::span<const CharSpan> protected_spans,
                        Rng& rng) const override;

 private:
  // Empty when no candidate qualifies.
  std::string SampleWord(std::string_view text, size_t position, Rng& rng) const;

  std::shared_ptr<const ModelParams<float>> params_;
  WordPieceTokenizer tokenizer_;
  MlmInsertOptions options_;
  std::vector<bool> whole_word_;  // per vocabulary id
};

}  // namespace np2io

#endif  // NP2IO_CLASSIFIER_MLM_INSERTER_H_
