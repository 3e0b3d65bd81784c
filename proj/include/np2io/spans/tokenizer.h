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

#ifndef NP2IO_SPANS_TOKENIZER_H_
#define NP2IO_SPANS_TOKENIZER_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "np2io/spans/char_span.h"

namespace np2io {

inline constexpr size_t kDefaultMaxLen = 512;

// One position of a model input. Synthetic tokens ([CLS], [SEP], padding)
// carry no span and are never eligible for the loss.
struct TokenSpan {
  size_t index = 0;
  int32_t token_id = 0;
  std::optional<CharSpan> span;

  bool synthetic() const { return !span.has_value(); }
  bool operator==(const TokenSpan&) const = default;
};

struct TokenizedPost {
  std::vector<TokenSpan> tokens;
  bool truncated = false;

  std::vector<int32_t> ids() const;
  size_t size() const { return tokens.size(); }
};

class SubwordTokenizer {
 public:
  virtual ~SubwordTokenizer() = default;
  // At most max_len tokens including delimiters; trailing pieces are dropped
  // when the post is longer and `truncated` is set.
  virtual TokenizedPost Tokenize(std::string_view text, size_t max_len = kDefaultMaxLen) const = 0;
};

class WordPieceVocab {
 public:
  WordPieceVocab() = default;
  explicit WordPieceVocab(std::vector<std::string> tokens);

  // vocab.txt layout: one token per line, id = line number from 0.
  static WordPieceVocab LoadFile(const std::filesystem::path& path);
  static WordPieceVocab Parse(std::string_view contents);
  std::string Serialize() const;

  std::optional<int32_t> Find(std::string_view token) const;
  const std::string& Token(int32_t id) const { return tokens_.at(static_cast<size_t>(id)); }
  size_t size() const { return tokens_.size(); }
  const std::vector<std::string>& tokens() const { return tokens_; }

  int32_t pad_id() const { return pad_; }
  int32_t unk_id() const { return unk_; }
  int32_t cls_id() const { return cls_; }
  int32_t sep_id() const { return sep_; }
  // -1 when the vocabulary has no [MASK] entry.
  int32_t mask_id() const { return mask_; }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int32_t> ids_;
  int32_t pad_ = -1, unk_ = -1, cls_ = -1, sep_ = -1, mask_ = -1;
};

// Uncased BERT tokenization: whitespace and punctuation splitting, accent
// stripping for lookup, then greedy longest-match-first word pieces. Offsets
// always refer to the original input bytes.
class WordPieceTokenizer : public SubwordTokenizer {
 public:
  explicit WordPieceTokenizer(WordPieceVocab vocab, size_t max_chars_per_word = 100);

  TokenizedPost Tokenize(std::string_view text, size_t max_len = kDefaultMaxLen) const override;
  const WordPieceVocab& vocab() const { return vocab_; }

  // Words produced by the pre-tokenization step, with their spans.
  static std::vector<std::pair<std::string, CharSpan>> PreTokenize(std::string_view text);

 private:
  WordPieceVocab vocab_;
  size_t max_chars_per_word_;
};

struct VocabBuildOptions {
  size_t min_count = 2;
  size_t max_size = 8000;
};

// Builds a WordPiece vocabulary for from-scratch backbones: the special
// tokens, every observed character (bare and "##"-prefixed) and the most
// frequent words. Deterministic for a given corpus.
WordPieceVocab BuildWordPieceVocab(const std::vector<std::string>& texts,
                                   const VocabBuildOptions& options = {});

}  // namespace np2io

#endif  // NP2IO_SPANS_TOKENIZER_H_
