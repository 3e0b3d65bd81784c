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

#include "np2io/spans/tokenizer.h"

#include <algorithm>
#include <map>

#include "np2io/common/errors.h"
#include "np2io/common/files.h"
#include "np2io/common/text.h"

namespace np2io {
namespace {

bool IsWhitespace(char32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' || cp == '\v' ||
         cp == 0xA0 || cp == 0x1680 || (cp >= 0x2000 && cp <= 0x200A) || cp == 0x2028 ||
         cp == 0x2029 || cp == 0x202F || cp == 0x205F || cp == 0x3000;
}

bool IsControl(char32_t cp) {
  if (cp == '\t' || cp == '\n' || cp == '\r') return false;
  return cp < 0x20 || (cp >= 0x7F && cp < 0xA0) || cp == 0x200B || cp == 0xFEFF || cp == 0xFFFD;
}

bool IsPunctuation(char32_t cp) {
  if ((cp >= 33 && cp <= 47) || (cp >= 58 && cp <= 64) || (cp >= 91 && cp <= 96) ||
      (cp >= 123 && cp <= 126)) {
    return true;
  }
  return cp == 0xA1 || cp == 0xA7 || cp == 0xAB || cp == 0xB6 || cp == 0xB7 || cp == 0xBB ||
         cp == 0xBF || (cp >= 0x2010 && cp <= 0x2027) || (cp >= 0x2030 && cp <= 0x205E) ||
         (cp >= 0x3001 && cp <= 0x3003) || (cp >= 0x3008 && cp <= 0x3011);
}

bool IsCjk(char32_t cp) {
  return (cp >= 0x4E00 && cp <= 0x9FFF) || (cp >= 0x3400 && cp <= 0x4DBF) ||
         (cp >= 0x20000 && cp <= 0x2A6DF) || (cp >= 0xF900 && cp <= 0xFAFF);
}

bool IsCombiningMark(char32_t cp) { return cp >= 0x300 && cp <= 0x36F; }

// Lowercased, accent-stripped form of one code point used for lookup.
std::string NormalizeForLookup(char32_t cp) {
  std::string out;
  if (IsCombiningMark(cp)) return out;
  static constexpr std::string_view kLatin1 =
      // U+00C0 .. U+00FF, '?' where no plain base letter exists.
      "aaaaaaaceeeeiiiidnooooo?ouuuuyts"
      "aaaaaaaceeeeiiiidnooooo?ouuuuyty";
  if (cp >= 'A' && cp <= 'Z') {
    out.push_back(static_cast<char>(cp + 32));
  } else if (cp >= 0xC0 && cp <= 0xFF && kLatin1[cp - 0xC0] != '?') {
    out.push_back(kLatin1[cp - 0xC0]);
    if (cp == 0xC6 || cp == 0xE6) out = "ae";
    if (cp == 0xDF) out = "ss";
  } else {
    const std::string lowered = ToLowerUtf8([&] {
      std::string s;
      AppendUtf8(cp, s);
      return s;
    }());
    out = lowered;
  }
  return out;
}

// A pre-token: its lookup units (one per code point carrying text) with the
// byte range each unit covers in the original string.
struct Unit {
  std::string norm;
  size_t begin;
  size_t end;
};

std::vector<std::vector<Unit>> SplitWords(std::string_view text) {
  std::vector<std::vector<Unit>> words;
  std::vector<Unit> current;
  auto flush = [&] {
    if (!current.empty()) words.push_back(std::move(current));
    current.clear();
  };
  for (const CodePoint& cp : DecodeUtf8(text)) {
    if (IsWhitespace(cp.value)) {
      flush();
      continue;
    }
    if (IsControl(cp.value)) continue;
    if (IsPunctuation(cp.value) || IsCjk(cp.value)) {
      flush();
      current.push_back({NormalizeForLookup(cp.value), cp.begin, cp.end});
      flush();
      continue;
    }
    std::string norm = NormalizeForLookup(cp.value);
    if (norm.empty()) {
      // Combining mark: widen the previous unit, or start a bare unit.
      if (!current.empty()) {
        current.back().end = cp.end;
        continue;
      }
    }
    current.push_back({std::move(norm), cp.begin, cp.end});
  }
  flush();
  return words;
}

}  // namespace

std::vector<int32_t> TokenizedPost::ids() const {
  std::vector<int32_t> out;
  out.reserve(tokens.size());
  for (const TokenSpan& t : tokens) out.push_back(t.token_id);
  return out;
}

WordPieceVocab::WordPieceVocab(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  for (size_t i = 0; i < tokens_.size(); ++i) {
    ids_.emplace(tokens_[i], static_cast<int32_t>(i));  // first occurrence wins
  }
  auto id_of = [&](std::string_view t) {
    auto it = ids_.find(std::string(t));
    return it == ids_.end() ? -1 : it->second;
  };
  pad_ = id_of("[PAD]");
  unk_ = id_of("[UNK]");
  cls_ = id_of("[CLS]");
  sep_ = id_of("[SEP]");
  mask_ = id_of("[MASK]");
  if (unk_ < 0 || cls_ < 0 || sep_ < 0 || pad_ < 0) {
    throw ConfigError("vocabulary lacks one of [PAD], [UNK], [CLS], [SEP]");
  }
}

WordPieceVocab WordPieceVocab::LoadFile(const std::filesystem::path& path) {
  return Parse(ReadFile(path));
}

WordPieceVocab WordPieceVocab::Parse(std::string_view contents) {
  std::vector<std::string> tokens;
  size_t pos = 0;
  while (pos < contents.size()) {
    size_t nl = contents.find('\n', pos);
    if (nl == std::string_view::npos) nl = contents.size();
    std::string_view line = contents.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    tokens.emplace_back(line);
    pos = nl + 1;
  }
  return WordPieceVocab(std::move(tokens));
}

std::string WordPieceVocab::Serialize() const {
  std::string out;
  for (const std::string& t : tokens_) {
    out += t;
    out += '\n';
  }
  return out;
}

std::optional<int32_t> WordPieceVocab::Find(std::string_view token) const {
  auto it = ids_.find(std::string(token));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

WordPieceTokenizer::WordPieceTokenizer(WordPieceVocab vocab, size_t max_chars_per_word)
    : vocab_(std::move(vocab)), max_chars_per_word_(max_chars_per_word) {}

std::vector<std::pair<std::string, CharSpan>> WordPieceTokenizer::PreTokenize(
    std::string_view text) {
  std::vector<std::pair<std::string, CharSpan>> out;
  for (const auto& units : SplitWords(text)) {
    std::string word;
    for (const Unit& u : units) word += u.norm;
    out.emplace_back(std::move(word), CharSpan{units.front().begin, units.back().end});
  }
  return out;
}

TokenizedPost WordPieceTokenizer::Tokenize(std::string_view text, size_t max_len) const {
  if (max_len < 2) throw ContractViolation("max_len must leave room for [CLS] and [SEP]");
  const size_t budget = max_len - 2;
  TokenizedPost out;
  out.tokens.push_back({0, vocab_.cls_id(), std::nullopt});

  std::vector<std::pair<int32_t, CharSpan>> pieces;
  for (const auto& units : SplitWords(text)) {
    const CharSpan word_span{units.front().begin, units.back().end};
    if (units.size() > max_chars_per_word_) {
      pieces.emplace_back(vocab_.unk_id(), word_span);
      continue;
    }
    std::vector<std::pair<int32_t, CharSpan>> word_pieces;
    size_t start = 0;
    bool bad = false;
    while (start < units.size()) {
      size_t end = units.size();
      std::optional<int32_t> found;
      while (start < end) {
        std::string candidate = start > 0 ? "##" : "";
        for (size_t k = start; k < end; ++k) candidate += units[k].norm;
        found = vocab_.Find(candidate);
        if (found) break;
        --end;
      }
      if (!found) {
        bad = true;
        break;
      }
      word_pieces.emplace_back(*found, CharSpan{units[start].begin, units[end - 1].end});
      start = end;
    }
    if (bad) {
      pieces.emplace_back(vocab_.unk_id(), word_span);
    } else {
      pieces.insert(pieces.end(), word_pieces.begin(), word_pieces.end());
    }
  }

  if (pieces.size() > budget) {
    out.truncated = true;
    pieces.resize(budget);
  }
  for (const auto& [id, span] : pieces) out.tokens.push_back({out.tokens.size(), id, span});
  out.tokens.push_back({out.tokens.size(), vocab_.sep_id(), std::nullopt});
  return out;
}

WordPieceVocab BuildWordPieceVocab(const std::vector<std::string>& texts,
                                   const VocabBuildOptions& options) {
  std::map<std::string, size_t> word_counts;
  std::map<std::string, size_t> chars;
  for (const std::string& t : texts) {
    for (const auto& units : SplitWords(t)) {
      std::string word;
      for (const Unit& u : units) {
        word += u.norm;
        if (!u.norm.empty()) ++chars[u.norm];
      }
      ++word_counts[word];
    }
  }
  std::vector<std::string> tokens = {"[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]"};
  for (const auto& [c, n] : chars) tokens.push_back(c);
  for (const auto& [c, n] : chars) tokens.push_back("##" + c);

  std::vector<std::pair<std::string, size_t>> words(word_counts.begin(), word_counts.end());
  std::stable_sort(words.begin(), words.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::map<std::string, bool> present;
  for (const std::string& t : tokens) present[t] = true;
  for (const auto& [w, n] : words) {
    if (tokens.size() >= options.max_size) break;
    if (n < options.min_count) break;
    if (present.contains(w)) continue;
    tokens.push_back(w);
    present[w] = true;
  }
  return WordPieceVocab(std::move(tokens));
}

}  // namespace np2io
