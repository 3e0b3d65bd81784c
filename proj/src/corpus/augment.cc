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

#include "np2io/corpus/augment.h"

#include <algorithm>

#include "np2io/common/errors.h"
#include "np2io/common/log.h"
#include "np2io/common/text.h"
#include "np2io/spans/occurrences.h"

namespace np2io {

std::string ApplyInsertions(std::string_view original, std::span<const Insertion> insertions) {
  std::string out;
  size_t pos = 0;
  for (const Insertion& ins : insertions) {
    const size_t at = std::min(ins.offset, original.size());
    if (at < pos) throw ContractViolation("insertions must be sorted by offset");
    out.append(original.substr(pos, at - pos));
    out += ins.text;
    pos = at;
  }
  out.append(original.substr(pos));
  return out;
}

std::vector<size_t> InsertionPoints(std::string_view text,
                                    std::span<const CharSpan> protected_spans) {
  std::vector<size_t> points;
  for (const WordSlice& w : SplitWhitespace(text)) points.push_back(w.begin);
  points.push_back(text.size());
  std::erase_if(points, [&](size_t p) {
    return std::any_of(protected_spans.begin(), protected_spans.end(),
                       [p](const CharSpan& s) { return p > s.start && p < s.end; });
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

RandomWordInserter::RandomWordInserter(std::vector<std::string> words, size_t count)
    : words_(std::move(words)), count_(count) {
  if (words_.empty()) throw ConfigError("RandomWordInserter needs a non-empty word list");
}

AugmentedText RandomWordInserter::Augment(std::string_view text,
                                          std::span<const CharSpan> protected_spans,
                                          Rng& rng) const {
  const std::vector<size_t> points = InsertionPoints(text, protected_spans);
  std::vector<Insertion> insertions;
  for (size_t k = 0; k < count_ && !points.empty(); ++k) {
    const size_t at = points[rng.UniformIndex(points.size())];
    const std::string& word = words_[rng.UniformIndex(words_.size())];
    // Before a word: "word "; at the very end: " word".
    insertions.push_back({at, at == text.size() ? " " + word : word + " "});
  }
  std::stable_sort(insertions.begin(), insertions.end(),
                   [](const Insertion& a, const Insertion& b) { return a.offset < b.offset; });
  return {ApplyInsertions(text, insertions), std::move(insertions)};
}

namespace {

bool ValidVariant(const LabeledExample& ex, const AugmentedText& variant,
                  std::span<const CharSpan> protected_spans) {
  for (const Insertion& ins : variant.insertions) {
    if (ins.offset > ex.post.text.size()) return false;
    for (const CharSpan& s : protected_spans) {
      if (ins.offset > s.start && ins.offset < s.end) return false;
    }
  }
  if (!std::is_sorted(variant.insertions.begin(), variant.insertions.end(),
                      [](const Insertion& a, const Insertion& b) { return a.offset < b.offset; })) {
    return false;
  }
  // Insert-only: replaying the recorded insertions must give the variant.
  if (ApplyInsertions(ex.post.text, variant.insertions) != variant.text) return false;
  return variant.text.find(ex.phrase) != std::string::npos;
}

}  // namespace

std::vector<LabeledExample> Augment(const std::vector<LabeledExample>& train, int factor,
                                    const InsertionAugmenter& augmenter, uint64_t seed,
                                    AugmentStats* stats) {
  if (factor < 1) throw ConfigError("augmentation factor must be >= 1");
  AugmentStats local;
  std::vector<LabeledExample> out;
  out.reserve(train.size() * static_cast<size_t>(factor));
  out.insert(out.end(), train.begin(), train.end());

  std::vector<std::vector<CharSpan>> protected_spans;
  protected_spans.reserve(train.size());
  for (const LabeledExample& ex : train) {
    protected_spans.push_back(ex.phrase.empty() ? std::vector<CharSpan>{}
                                                : FindSubstrings(ex.post.text, ex.phrase));
  }

  for (int round = 1; round < factor; ++round) {
    for (size_t i = 0; i < train.size(); ++i) {
      const LabeledExample& ex = train[i];
      Rng rng(DeriveSeed(seed, {i, static_cast<uint64_t>(round)}));
      LabeledExample variant = ex;
      variant.post.id = ex.post.id + "~" + std::to_string(round);
      bool ok = false;
      for (size_t attempt = 0; attempt <= kAugmentRetries && !ok; ++attempt) {
        if (attempt > 0) ++local.retries;
        AugmentedText aug = augmenter.Augment(ex.post.text, protected_spans[i], rng);
        if (ValidVariant(ex, aug, protected_spans[i])) {
          variant.post.text = ToLowerUtf8(aug.text);
          ok = true;
        }
      }
      if (!ok) {
        ++local.fallbacks;
        LogWarning("augmenter kept failing on example " + ex.post.id + "; duplicating original");
      }
      ++local.variants;
      out.push_back(std::move(variant));
    }
  }
  if (stats != nullptr) *stats = local;
  return out;
}

}  // namespace np2io
