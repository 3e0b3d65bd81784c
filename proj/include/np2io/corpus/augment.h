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

#ifndef NP2IO_CORPUS_AUGMENT_H_
#define NP2IO_CORPUS_AUGMENT_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "np2io/common/rng.h"
#include "np2io/corpus/example.h"
#include "np2io/spans/char_span.h"

namespace np2io {

// `text` is inserted immediately before byte `offset` of the original
// string. Offsets refer to the original, not to the augmented text.
struct Insertion {
  size_t offset = 0;
  std::string text;

  bool operator==(const Insertion&) const = default;
};

struct AugmentedText {
  std::string text;
  std::vector<Insertion> insertions;  // sorted by offset
};

// Produces a variant of `text` by inserting tokens. Implementations must be
// stateless per call (all randomness comes from `rng`) and must not insert
// strictly inside any protected span.
class InsertionAugmenter {
 public:
  virtual ~InsertionAugmenter() = default;
  virtual AugmentedText Augment(std::string_view text, std::span<const CharSpan> protected_spans,
                                Rng& rng) const = 0;
};

// Applies sorted insertions to `original`.
std::string ApplyInsertions(std::string_view original, std::span<const Insertion> insertions);

// Offsets between words (before a word start or at the end of the text)
// that are not strictly inside a protected span.
std::vector<size_t> InsertionPoints(std::string_view text, std::span<const CharSpan> protected_spans);

// Inserts `count` words drawn uniformly from a fixed list at random word
// boundaries. Used for tests and as an offline stand-in for a masked-LM
// augmenter.
class RandomWordInserter : public InsertionAugmenter {
 public:
  RandomWordInserter(std::vector<std::string> words, size_t count);
  AugmentedText Augment(std::string_view text, std::span<const CharSpan> protected_spans,
                        Rng& rng) const override;

 private:
  std::vector<std::string> words_;
  size_t count_;
};

// Returns the text unchanged.
class IdentityAugmenter : public InsertionAugmenter {
 public:
  AugmentedText Augment(std::string_view text, std::span<const CharSpan>, Rng&) const override {
    return {std::string(text), {}};
  }
};

struct AugmentStats {
  size_t variants = 0;
  size_t retries = 0;
  size_t fallbacks = 0;  // variants replaced by a copy of the original
};

inline constexpr size_t kAugmentRetries = 5;

// Output holds `factor` copies of the input: the originals in input order,
// then factor-1 rounds of variants (round r, example i seeded from
// (seed, i, r)). A variant that deletes or rewrites text, inserts inside
// the phrase, or loses the phrase is regenerated up to kAugmentRetries
// times, then replaced by the original. Variant post ids get a "~r" suffix.
// Throws ConfigError when factor < 1.
std::vector<LabeledExample> Augment(const std::vector<LabeledExample>& train, int factor,
                                    const InsertionAugmenter& augmenter, uint64_t seed,
                                    AugmentStats* stats = nullptr);

}  // namespace np2io

#endif  // NP2IO_CORPUS_AUGMENT_H_
