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

#ifndef NP2IO_SPANS_NOUN_CHUNKER_H_
#define NP2IO_SPANS_NOUN_CHUNKER_H_

#include <string>
#include <string_view>
#include <vector>

#include "np2io/spans/char_span.h"

namespace np2io {

struct NounChunk {
  std::string text;
  CharSpan span;

  bool operator==(const NounChunk&) const = default;
};

class NounChunker {
 public:
  virtual ~NounChunker() = default;
  // Chunks ordered by start. May throw; callers go through ExtractNounChunks.
  virtual std::vector<NounChunk> Extract(std::string_view text) const = 0;
};

// Coarse word classes assigned by the rule-based chunker.
enum class WordClass {
  kDeterminer,
  kPossessive,
  kPronoun,
  kNumber,
  kAdjective,
  kNoun,
  kVerb,
  kAuxiliary,
  kAdverb,
  kAdposition,
  kConjunction,
  kParticle,
  kOther,
  kPunct,
};

struct TaggedWord {
  std::string text;
  CharSpan span;
  WordClass word_class;
};

// Lexicon-and-suffix tagger with a determiner/adjective/noun chunk grammar.
// Personal and indefinite pronouns form single-word chunks, otherwise a
// chunk is an optional determiner or possessive, modifiers, and a run of
// nouns ending in a noun head. Deterministic and dependency-free.
class RuleBasedChunker : public NounChunker {
 public:
  std::vector<NounChunk> Extract(std::string_view text) const override;
  std::vector<TaggedWord> Tag(std::string_view text) const;
};

struct ChunkResult {
  std::vector<NounChunk> chunks;
  std::vector<std::string> warnings;
};

// Runs the extractor; a throwing extractor yields no chunks and a warning.
// Chunks with invalid spans or mismatched text are dropped with a warning.
ChunkResult ExtractNounChunks(std::string_view text, const NounChunker& chunker);

}  // namespace np2io

#endif  // NP2IO_SPANS_NOUN_CHUNKER_H_
