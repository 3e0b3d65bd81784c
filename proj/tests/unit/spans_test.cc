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

#include <gtest/gtest.h>

#include <cstdlib>
#include "json.hpp"
#include <sstream>

#include "np2io/common/errors.h"
#include "np2io/common/files.h"
#include "np2io/common/rng.h"
#include "np2io/spans/eligible.h"
#include "np2io/spans/noun_chunker.h"
#include "np2io/spans/occurrences.h"
#include "np2io/spans/tokenizer.h"
#include "test_paths.h"

namespace np2io {
namespace {

using nlohmann::json;

WordPieceTokenizer TestTokenizer() {
  return WordPieceTokenizer(WordPieceVocab::LoadFile(testing::GoldenDir() / "test_vocab.txt"));
}

TokenSpan Real(size_t index, size_t start, size_t end) {
  return TokenSpan{index, 0, CharSpan{start, end}};
}

TokenSpan Synthetic(size_t index) { return TokenSpan{index, 0, std::nullopt}; }

TEST(OccurrencesTest, Examples) {
  EXPECT_EQ(FindOccurrences("vaccines kill. vaccines save.", "vaccines"),
            (std::vector<CharSpan>{{0, 8}, {15, 23}}));
  EXPECT_TRUE(FindOccurrences("concatenate", "cat").empty());
  EXPECT_TRUE(FindOccurrences("the cat sat", "dog").empty());
  EXPECT_THROW(FindOccurrences("text", ""), ContractViolation);
}

TEST(OccurrencesTest, CaseInsensitiveGreedyNonOverlapping) {
  EXPECT_EQ(FindOccurrences("Bill Gates and BILL GATES", "bill gates"),
            (std::vector<CharSpan>{{0, 10}, {15, 25}}));
  EXPECT_EQ(FindOccurrences("aa aa aa", "aa aa"), (std::vector<CharSpan>{{0, 5}}));
  EXPECT_EQ(FindOccurrences("j&j's shot", "j&j"), (std::vector<CharSpan>{{0, 3}}));
}

TEST(OccurrencesTest, LocateFallsBackToSubstrings) {
  EXPECT_EQ(LocatePhrase("microchips in the shot", "microchip"),
            (std::vector<CharSpan>{{0, 9}}));
  EXPECT_EQ(LocatePhrase("a microchip and microchips", "microchip"),
            (std::vector<CharSpan>{{2, 11}}));
  EXPECT_TRUE(LocatePhrase("nothing", "microchip").empty());
}

TEST(TokenizerTest, VaccinesPiecesPartitionTheWord) {
  const auto tok = TestTokenizer();
  const auto post = tok.Tokenize("vaccines");
  ASSERT_EQ(post.size(), 4u);
  EXPECT_TRUE(post.tokens[0].synthetic());
  EXPECT_TRUE(post.tokens[3].synthetic());
  EXPECT_EQ(tok.vocab().Token(post.tokens[1].token_id), "vacc");
  EXPECT_EQ(post.tokens[1].span, (CharSpan{0, 4}));
  EXPECT_EQ(tok.vocab().Token(post.tokens[2].token_id), "##ines");
  EXPECT_EQ(post.tokens[2].span, (CharSpan{4, 8}));
  EXPECT_FALSE(post.truncated);
}

TEST(TokenizerTest, EmptyPostHasOnlyDelimiters) {
  const auto post = TestTokenizer().Tokenize("");
  ASSERT_EQ(post.size(), 2u);
  EXPECT_TRUE(post.tokens[0].synthetic());
  EXPECT_TRUE(post.tokens[1].synthetic());
}

TEST(TokenizerTest, LongPostIsTruncated) {
  std::string text;
  while (text.size() < 10000) text += "we ";
  text.resize(10000);
  const auto post = TestTokenizer().Tokenize(text, 512);
  EXPECT_TRUE(post.truncated);
  EXPECT_EQ(post.size(), 512u);
  EXPECT_TRUE(post.tokens.back().synthetic());
  EXPECT_EQ(post.tokens[510].span, (CharSpan{1527, 1529}));  // 510th "we"
  EXPECT_THROW(TestTokenizer().Tokenize("x", 1), ContractViolation);
}

TEST(TokenizerTest, SpansAreOrderedAndReproduceText) {
  const auto tok = TestTokenizer();
  const std::string text = "Vaccines, they say, kill people!  Bill Gates' microchips track us.";
  const auto post = tok.Tokenize(text);
  std::string joined;
  size_t prev_end = 0;
  for (size_t i = 0; i < post.size(); ++i) {
    EXPECT_EQ(post.tokens[i].index, i);
    if (post.tokens[i].synthetic()) continue;
    const CharSpan s = *post.tokens[i].span;
    EXPECT_GE(s.start, prev_end);
    EXPECT_LT(s.start, s.end);
    prev_end = s.end;
    joined += text.substr(s.start, s.size());
  }
  std::string squeezed;
  for (char c : text) {
    if (c != ' ') squeezed += c;
  }
  EXPECT_EQ(joined, squeezed);
}

TEST(TokenizerTest, UnknownWordMapsToSingleUnk) {
  const auto tok = TestTokenizer();
  const auto post = tok.Tokenize("zebra");  // letters exist, so it decomposes
  EXPECT_GT(post.size(), 3u);
  const auto unk = tok.Tokenize("\xe2\x98\x83");  // snowman: not in vocab
  ASSERT_EQ(unk.size(), 3u);
  EXPECT_EQ(unk.tokens[1].token_id, tok.vocab().unk_id());
  EXPECT_EQ(unk.tokens[1].span, (CharSpan{0, 3}));
}

TEST(TokenizerTest, VocabRequiresSpecials) {
  EXPECT_THROW(WordPieceVocab(std::vector<std::string>{"a", "b"}), ConfigError);
  const auto vocab = WordPieceVocab::LoadFile(testing::GoldenDir() / "test_vocab.txt");
  EXPECT_EQ(WordPieceVocab::Parse(vocab.Serialize()).tokens(), vocab.tokens());
}

TEST(TokenizerTest, BuiltVocabCoversCorpus) {
  const std::vector<std::string> texts = {"vaccines kill people", "vaccines save people",
                                          "microchips track us"};
  const auto vocab = BuildWordPieceVocab(texts);
  EXPECT_TRUE(vocab.Find("vaccines").has_value());
  EXPECT_FALSE(vocab.Find("track").has_value());  // below min_count
  WordPieceTokenizer tok(vocab);
  for (const auto& text : texts) {
    for (const auto& t : tok.Tokenize(text).tokens) EXPECT_NE(t.token_id, vocab.unk_id());
  }
}

TEST(EligibleTest, Examples) {
  const std::vector<TokenSpan> tokens = {Real(0, 0, 3), Real(1, 3, 8), Real(2, 9, 13)};
  EXPECT_TRUE(EligibleTokens(tokens, {}).empty());
  const std::vector<CharSpan> occ = {{0, 8}};
  EXPECT_EQ(EligibleTokens(tokens, occ), (EligibleTokenSet{0, 1}));
  const std::vector<CharSpan> whole = {{0, 13}};
  const std::vector<TokenSpan> with_delims = {Synthetic(0), Real(1, 0, 3), Real(2, 3, 8),
                                              Real(3, 9, 13), Synthetic(4)};
  EXPECT_EQ(EligibleTokens(with_delims, whole), (EligibleTokenSet{1, 2, 3}));
}

EligibleTokenSet BruteForceEligible(const std::vector<TokenSpan>& tokens,
                                    const std::vector<CharSpan>& occurrences, size_t length) {
  std::vector<bool> marked(length, false);
  for (const CharSpan& o : occurrences) {
    for (size_t c = o.start; c < o.end; ++c) marked[c] = true;
  }
  EligibleTokenSet out;
  for (const TokenSpan& t : tokens) {
    if (t.synthetic()) continue;
    for (size_t c = t.span->start; c < t.span->end; ++c) {
      if (marked[c]) {
        out.push_back(t.index);
        break;
      }
    }
  }
  return out;
}

std::string RandomPost(Rng& rng) {
  static const char* kWords[] = {"vaccines", "kill", "people", "bill",  "gates", "we",
                                 "chip",     "microchips", "the", "government", "tower",
                                 "zzz",      "cells", "!", ",", "good"};
  std::string text;
  const size_t n = rng.UniformIndex(40);
  for (size_t i = 0; i < n; ++i) {
    if (!text.empty()) text += rng.Bernoulli(0.2) ? "  " : " ";
    text += kWords[rng.UniformIndex(16)];
  }
  return text;
}

TEST(EligibleTest, MatchesPerCharacterOracleAndCoversOccurrences) {
  const auto tok = TestTokenizer();
  static const char* kPhrases[] = {"vaccines", "bill gates", "we", "chip", "the government"};
  Rng rng(2024);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::string text = RandomPost(rng);
    const size_t max_len = rng.Bernoulli(0.2) ? 2 + rng.UniformIndex(20) : kDefaultMaxLen;
    const auto post = tok.Tokenize(text, max_len);
    const auto occ = FindOccurrences(text, kPhrases[rng.UniformIndex(5)]);
    const auto eligible = EligibleTokens(post.tokens, occ);
    ASSERT_EQ(eligible, BruteForceEligible(post.tokens, occ, text.size())) << text;
    size_t last_end = 0;
    for (const auto& t : post.tokens) {
      if (!t.synthetic()) last_end = t.span->end;
    }
    for (const CharSpan& o : occ) {
      if (post.truncated && o.end > last_end) continue;
      for (size_t c = o.start; c < o.end; ++c) {
        if (text[c] == ' ') continue;
        bool covered = false;
        for (size_t i : eligible) covered |= post.tokens[i].span->Contains(c);
        ASSERT_TRUE(covered) << "char " << c << " of '" << text << "'";
      }
    }
  }
}

TEST(EligibleTest, MonotoneInOccurrences) {
  Rng rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<TokenSpan> tokens = {Synthetic(0)};
    size_t pos = 0;
    for (size_t i = 1; i < 20; ++i) {
      pos += rng.UniformIndex(2);
      const size_t len = 1 + rng.UniformIndex(5);
      tokens.push_back(Real(i, pos, pos + len));
      pos += len;
    }
    std::vector<CharSpan> occ;
    EligibleTokenSet prev;
    for (int k = 0; k < 5; ++k) {
      const size_t s = rng.UniformIndex(pos);
      occ.push_back({s, s + 1 + rng.UniformIndex(pos - s)});
      const auto next = EligibleTokens(tokens, occ);
      for (size_t i : prev) {
        ASSERT_TRUE(std::find(next.begin(), next.end(), i) != next.end());
      }
      prev = next;
    }
  }
}

TEST(NounChunkerTest, Examples) {
  RuleBasedChunker chunker;
  const auto result = ExtractNounChunks("bill gates is developing a vaccine", chunker);
  ASSERT_EQ(result.chunks.size(), 2u);
  EXPECT_EQ(result.chunks[0], (NounChunk{"bill gates", {0, 10}}));
  EXPECT_EQ(result.chunks[1], (NounChunk{"a vaccine", {25, 34}}));
  EXPECT_TRUE(ExtractNounChunks("", chunker).chunks.empty());
  EXPECT_TRUE(ExtractNounChunks("run quickly", chunker).chunks.empty());
}

class ThrowingChunker : public NounChunker {
 public:
  std::vector<NounChunk> Extract(std::string_view) const override {
    throw std::runtime_error("parser crashed");
  }
};

TEST(NounChunkerTest, FailureYieldsEmptyWithWarning) {
  const auto result = ExtractNounChunks("anything", ThrowingChunker());
  EXPECT_TRUE(result.chunks.empty());
  ASSERT_EQ(result.warnings.size(), 1u);
}

// Golden file rows: {"text", "chunks": [[text, start, end]...], "tokens": [[piece, start, end]...]}.
// Synthetic tokens are recorded with null offsets. Set NP2IO_UPDATE_GOLDEN=1 to rewrite.
json GoldenRow(const std::string& text, const RuleBasedChunker& chunker,
               const WordPieceTokenizer& tok) {
  json row;
  row["text"] = text;
  row["chunks"] = json::array();
  for (const auto& c : ExtractNounChunks(text, chunker).chunks) {
    row["chunks"].push_back({c.text, c.span.start, c.span.end});
  }
  row["tokens"] = json::array();
  for (const auto& t : tok.Tokenize(text).tokens) {
    if (t.synthetic()) {
      row["tokens"].push_back({tok.vocab().Token(t.token_id), nullptr, nullptr});
    } else {
      row["tokens"].push_back({tok.vocab().Token(t.token_id), t.span->start, t.span->end});
    }
  }
  return row;
}

TEST(GoldenTest, ChunkerAndTokenizerArePinned) {
  const auto golden_path = testing::GoldenDir() / "spans_golden.jsonl";
  const auto inputs_path = testing::GoldenDir() / "spans_inputs.txt";
  RuleBasedChunker chunker;
  const auto tok = TestTokenizer();
  std::vector<std::string> inputs;
  std::istringstream in(ReadFile(inputs_path));
  for (std::string line; std::getline(in, line);) inputs.push_back(line);

  if (const char* update = std::getenv("NP2IO_UPDATE_GOLDEN"); update && *update == '1') {
    std::string out;
    for (const auto& text : inputs) out += GoldenRow(text, chunker, tok).dump() + "\n";
    WriteFile(golden_path, out);
  }
  std::istringstream golden(ReadFile(golden_path));
  size_t i = 0;
  for (std::string line; std::getline(golden, line); ++i) {
    ASSERT_LT(i, inputs.size());
    const json expected = json::parse(line);
    EXPECT_EQ(GoldenRow(expected["text"].get<std::string>(), chunker, tok), expected);
  }
  EXPECT_EQ(i, inputs.size());
}

}  // namespace
}  // namespace np2io
