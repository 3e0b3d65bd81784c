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

#include "np2io/classifier/mlm_inserter.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "np2io/common/errors.h"
#include "np2io/common/text.h"

namespace np2io {

MaskedLmInserter::MaskedLmInserter(std::shared_ptr<const ModelParams<float>> params,
                                   WordPieceVocab vocab, MlmInsertOptions options)
    : params_(std::move(params)), tokenizer_(std::move(vocab)), options_(options) {
  if (!params_->mlm) throw ConfigError("masked-LM insertion needs a backbone with an MLM head");
  const WordPieceVocab& v = tokenizer_.vocab();
  if (v.mask_id() < 0) throw ConfigError("masked-LM insertion needs a [MASK] token");
  if (options_.top_k == 0) throw ConfigError("masked-LM insertion: top_k must be positive");
  whole_word_.resize(v.size());
  for (size_t id = 0; id < v.size(); ++id) {
    const std::string& t = v.Token(static_cast<int32_t>(id));
    whole_word_[id] = t.size() >= 2 && std::all_of(t.begin(), t.end(), [](char c) {
                        return c >= 'a' && c <= 'z';
                      });
  }
}

std::string MaskedLmInserter::SampleWord(std::string_view text, size_t position, Rng& rng) const {
  const size_t max_len =
      std::min<size_t>(options_.max_len, static_cast<size_t>(params_->config.max_position_embeddings));
  const TokenizedPost tokens = tokenizer_.Tokenize(text, max_len > 0 ? max_len - 1 : 0);
  // Splice [MASK] before the first real token starting at or after `position`.
  std::vector<int32_t> ids;
  size_t mask_index = 0;
  bool placed = false;
  for (const TokenSpan& t : tokens.tokens) {
    const bool is_sep = t.synthetic() && !ids.empty();
    if (!placed && (is_sep || (!t.synthetic() && t.span->start >= position))) {
      if (is_sep && tokens.truncated) return "";  // insertion point beyond the window
      mask_index = ids.size();
      ids.push_back(tokenizer_.vocab().mask_id());
      placed = true;
    }
    ids.push_back(t.token_id);
  }
  if (!placed || ids.size() > max_len) return "";
  const ForwardState<float> state = Forward(*params_, ids);
  const Matrix<float> logits = MlmLogits(*params_, state.hidden);
  const auto row = logits.row(static_cast<Eigen::Index>(mask_index));
  std::vector<int32_t> candidates;
  for (int32_t id = 0; id < static_cast<int32_t>(whole_word_.size()); ++id) {
    if (whole_word_[id]) candidates.push_back(id);
  }
  if (candidates.empty()) return "";
  const size_t k = std::min(options_.top_k, candidates.size());
  std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(k),
                    candidates.end(), [&](int32_t a, int32_t b) {
                      return row(a) > row(b) || (row(a) == row(b) && a < b);
                    });
  candidates.resize(k);
  std::vector<double> weights(k);
  const double top = row(candidates[0]);
  for (size_t i = 0; i < k; ++i) weights[i] = std::exp(static_cast<double>(row(candidates[i])) - top);
  double draw = rng.UniformReal() * std::accumulate(weights.begin(), weights.end(), 0.0);
  size_t pick = 0;
  while (pick + 1 < k && draw >= weights[pick]) draw -= weights[pick++];
  return tokenizer_.vocab().Token(candidates[pick]);
}

AugmentedText MaskedLmInserter::Augment(std::string_view text,
                                        std::span<const CharSpan> protected_spans,
                                        Rng& rng) const {
  std::vector<size_t> points = InsertionPoints(text, protected_spans);
  const size_t words = SplitWhitespace(text).size();
  size_t count = static_cast<size_t>(std::lround(options_.fraction * static_cast<double>(words)));
  count = std::clamp(count, options_.min_insertions, options_.max_insertions);
  count = std::min(count, points.size());
  // Distinct points, chosen uniformly, applied left to right.
  rng.Shuffle(std::span<size_t>(points));
  points.resize(count);
  std::sort(points.begin(), points.end());
  std::vector<Insertion> insertions;
  std::string current(text);
  size_t shift = 0;
  for (size_t at : points) {
    const std::string word = SampleWord(current, at + shift, rng);
    if (word.empty()) continue;
    Insertion ins{at, at == text.size() ? " " + word : word + " "};
    current.insert(at + shift, ins.text);
    shift += ins.text.size();
    insertions.push_back(std::move(ins));
  }
  return {std::move(current), std::move(insertions)};
}

}  // namespace np2io
