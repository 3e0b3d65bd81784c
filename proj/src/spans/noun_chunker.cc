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

#include "np2io/spans/noun_chunker.h"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "np2io/common/log.h"
#include "np2io/common/text.h"

namespace np2io {
namespace {

using WordSet = std::unordered_set<std::string_view>;

WordSet MakeSet(std::string_view words) {
  WordSet set;
  for (const WordSlice& w : SplitWhitespace(words)) set.insert(w.text);
  return set;
}

const WordSet& Determiners() {
  static const auto* s = new WordSet(MakeSet(
      "a an the this that these those some any every each no all both another either neither "
      "many several few much more most such enough"));
  return *s;
}

const WordSet& Possessives() {
  static const auto* s = new WordSet(MakeSet("my our your his her its their whose"));
  return *s;
}

const WordSet& Pronouns() {
  static const auto* s = new WordSet(MakeSet(
      "i me we us you he him she it they them myself ourselves yourself yourselves himself "
      "herself itself themselves everyone everybody someone somebody anyone anybody nobody "
      "everything something anything nothing mine ours yours hers theirs y'all"));
  return *s;
}

const WordSet& Auxiliaries() {
  static const auto* s = new WordSet(MakeSet(
      "am is are was were be been being have has had having do does did will would shall "
      "should can could may might must 's 're 've 'll 'd 'm don't doesn't didn't isn't aren't "
      "wasn't weren't won't wouldn't can't cannot couldn't shouldn't haven't hasn't hadn't "
      "mustn't i'm we're they're you're he's she's it's i've we've they've i'll we'll they'll "
      "i'd we'd they'd"));
  return *s;
}

const WordSet& Adpositions() {
  static const auto* s = new WordSet(MakeSet(
      "of in on at by for with about against between into through during before after above "
      "below from up down out off over under around among across behind beyond within without "
      "toward towards upon via per near like unlike since until despite"));
  return *s;
}

const WordSet& Conjunctions() {
  static const auto* s = new WordSet(MakeSet(
      "and or but nor yet because if while although though whether than as unless whereas so"));
  return *s;
}

const WordSet& Others() {
  static const auto* s = new WordSet(MakeSet(
      "what which who whom where when why how please yes yeah ok okay oh lol hey"));
  return *s;
}

const WordSet& Adverbs() {
  static const auto* s = new WordSet(MakeSet(
      "very really just also too not never always often still even already now then here "
      "there again ever only quite almost soon maybe perhaps away back together literally "
      "else instead anyway once twice later rather"));
  return *s;
}

// Nouns that end in -ly.
const WordSet& LyNouns() {
  static const auto* s = new WordSet(MakeSet(
      "family supply ally reply fly july italy assembly rally belly bully holly lily jelly "
      "monopoly anomaly butterfly melancholy homily"));
  return *s;
}

const WordSet& Adjectives() {
  static const auto* s = new WordSet(MakeSet(
      "good bad great new old big small high low large little long short young true false "
      "real free safe unsafe evil toxic deadly healthy sick important lovely happy sad best "
      "worse worst better whole full own other same different public private local global "
      "natural medical social human political federal national american experimental "
      "mandatory sure certain possible likely clear strong weak rich poor fake stupid crazy "
      "scary wrong right entire main major final early late recent current open easy hard "
      "quick slow dead alive aware afraid ready available extreme stable nice fine "
      "horrible terrible awful amazing wonderful innocent guilty secret hidden genetic "
      "elite corrupt sinister covid novel deep last next boring interesting exciting shocking "
      "alarming concerning misleading disgusting terrifying existing ongoing upcoming "
      "lasting"));
  return *s;
}

const WordSet& NumberWords() {
  static const auto* s = new WordSet(MakeSet(
      "one two three four five six seven eight nine ten eleven twelve twenty thirty forty "
      "fifty hundred thousand million billion millions billions thousands hundreds"));
  return *s;
}

const WordSet& VerbBases() {
  static const auto* s = new WordSet(MakeSet(
      "be have do say get make go know take see come think look want give use find tell ask "
      "work seem feel try leave call need become put mean keep let begin show hear play run "
      "move like live believe hold bring happen write provide sit stand lose pay meet include "
      "continue set learn change lead understand watch follow stop create speak read allow "
      "add spend grow open walk win offer remember love consider appear buy wait serve die "
      "send expect build stay fall cut reach kill remain suggest raise pass sell require "
      "report decide pull develop track inject spread cause cure save protect destroy control "
      "poison force infect vaccinate test prove deny hide lie fight help harm hurt fry "
      "eradicate prevent trust hate fear support push plan claim warn want wake stop steal "
      "monitor manipulate murder depopulate reduce increase sterilize alter modify mandate "
      "refuse comply obey resist tell share post die ban censor arrest jail know guess hope "
      "agree happen fund profit benefit keep elongate remove make made cover"));
  return *s;
}

const std::unordered_map<std::string_view, std::string_view>& IrregularVerbs() {
  static const auto* m = new std::unordered_map<std::string_view, std::string_view>{
      {"said", "say"},   {"got", "get"},       {"gotten", "get"},  {"went", "go"},
      {"gone", "go"},    {"knew", "know"},     {"known", "know"},  {"took", "take"},
      {"taken", "take"}, {"saw", "see"},       {"seen", "see"},    {"came", "come"},
      {"thought", "think"}, {"gave", "give"},  {"given", "give"},  {"found", "find"},
      {"told", "tell"},  {"felt", "feel"},     {"left", "leave"},  {"kept", "keep"},
      {"began", "begin"}, {"begun", "begin"},  {"heard", "hear"},  {"ran", "run"},
      {"held", "hold"},  {"brought", "bring"}, {"wrote", "write"}, {"written", "write"},
      {"sat", "sit"},    {"stood", "stand"},   {"lost", "lose"},   {"paid", "pay"},
      {"met", "meet"},   {"led", "lead"},      {"understood", "understand"},
      {"spoke", "speak"}, {"spoken", "speak"}, {"spent", "spend"}, {"grew", "grow"},
      {"grown", "grow"}, {"won", "win"},       {"bought", "buy"},  {"sent", "send"},
      {"built", "build"}, {"fell", "fall"},    {"sold", "sell"},   {"hid", "hide"},
      {"hidden", "hide"}, {"fought", "fight"}, {"stole", "steal"}, {"stolen", "steal"},
      {"woke", "wake"},  {"shot", "shoot"},    {"does", "do"},     {"did", "do"},
      {"done", "do"},    {"made", "make"},     {"became", "become"}};
  return *m;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// Auxiliaries that are always followed by a bare verb.
const WordSet& VerbalAuxiliaries() {
  static const auto* s = new WordSet(MakeSet(
      "do does did will would shall should can could may might must 'll 'd don't doesn't "
      "didn't won't wouldn't can't cannot couldn't shouldn't mustn't i'll we'll they'll i'd "
      "we'd they'd"));
  return *s;
}

// Nouns that double as verb forms but usually head a compound ("the pfizer shot").
const WordSet& CompoundHeads() {
  static const auto* s = new WordSet(MakeSet(
      "shot shots jab jabs dose doses test tests trial trials mandate mandates cure cures "
      "plan plans study studies"));
  return *s;
}

bool InVerbs(std::string_view w) { return VerbBases().contains(w); }

// True when the word is an inflection of a known verb.
bool IsVerbForm(std::string_view w) {
  if (InVerbs(w) || IrregularVerbs().contains(w)) return true;
  auto strip = [&](size_t n) { return std::string(w.substr(0, w.size() - n)); };
  if (w.size() > 3 && EndsWith(w, "ies") && InVerbs(strip(3) + "y")) return true;
  if (w.size() > 3 && EndsWith(w, "es") && InVerbs(strip(2))) return true;
  if (w.size() > 2 && EndsWith(w, "s") && InVerbs(strip(1))) return true;
  if (w.size() > 3 && EndsWith(w, "ied") && InVerbs(strip(3) + "y")) return true;
  if (w.size() > 3 && EndsWith(w, "ed")) {
    if (InVerbs(strip(2)) || InVerbs(strip(1))) return true;
    const std::string stem = strip(2);
    if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2] &&
        InVerbs(stem.substr(0, stem.size() - 1))) {
      return true;
    }
  }
  if (w.size() > 4 && EndsWith(w, "ing")) {
    const std::string stem = strip(3);
    if (InVerbs(stem) || InVerbs(stem + "e")) return true;
    if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2] &&
        InVerbs(stem.substr(0, stem.size() - 1))) {
      return true;
    }
  }
  return false;
}

bool IsNumber(std::string_view w) {
  if (NumberWords().contains(w)) return true;
  bool digit = false;
  for (char c : w) {
    if (c >= '0' && c <= '9') {
      digit = true;
    } else if (c != ',' && c != '.' && c != '%') {
      return false;
    }
  }
  return digit;
}

bool IsAdjectiveSuffix(std::string_view w) {
  if (w.size() <= 5) return false;
  return EndsWith(w, "ous") || EndsWith(w, "ful") || EndsWith(w, "ive") || EndsWith(w, "less") ||
         EndsWith(w, "able") || EndsWith(w, "ible");
}

bool IsWordChar(unsigned char c) { return IsWordByte(c) || c == '\'' || c == '&' || c == '-'; }

// Splits into words (letters, digits, inner apostrophes, ampersands and
// hyphens) and single punctuation marks.
std::vector<std::pair<std::string, CharSpan>> Words(std::string_view text) {
  std::vector<std::pair<std::string, CharSpan>> out;
  size_t i = 0;
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (IsAsciiSpace(c)) {
      ++i;
      continue;
    }
    if (IsWordByte(c)) {
      size_t j = i;
      while (j < text.size() && IsWordChar(static_cast<unsigned char>(text[j]))) ++j;
      // Trailing connector characters are not part of the word.
      while (j > i + 1 && (text[j - 1] == '\'' || text[j - 1] == '-' || text[j - 1] == '&')) --j;
      out.emplace_back(ToLowerUtf8(text.substr(i, j - i)), CharSpan{i, j});
      i = j;
      continue;
    }
    out.emplace_back(std::string(1, static_cast<char>(c)), CharSpan{i, i + 1});
    ++i;
  }
  return out;
}

WordClass LexicalClass(std::string_view w) {
  if (w.empty()) return WordClass::kOther;
  if (!IsWordByte(static_cast<unsigned char>(w.front()))) return WordClass::kPunct;
  if (Pronouns().contains(w)) return WordClass::kPronoun;
  if (Possessives().contains(w)) return WordClass::kPossessive;
  if (Determiners().contains(w)) return WordClass::kDeterminer;
  if (Auxiliaries().contains(w)) return WordClass::kAuxiliary;
  if (w == "to" || w == "not" || w == "n't") return WordClass::kParticle;
  if (Adpositions().contains(w)) return WordClass::kAdposition;
  if (Conjunctions().contains(w)) return WordClass::kConjunction;
  if (Others().contains(w)) return WordClass::kOther;
  if (Adverbs().contains(w)) return WordClass::kAdverb;
  if (IsNumber(w)) return WordClass::kNumber;
  if (Adjectives().contains(w) || IsAdjectiveSuffix(w)) return WordClass::kAdjective;
  if (w.size() > 4 && EndsWith(w, "ly") && !LyNouns().contains(w)) return WordClass::kAdverb;
  return WordClass::kNoun;
}

bool IsNominalModifier(WordClass c) {
  return c == WordClass::kNumber || c == WordClass::kAdjective || c == WordClass::kNoun;
}

}  // namespace

std::vector<TaggedWord> RuleBasedChunker::Tag(std::string_view text) const {
  std::vector<TaggedWord> tagged;
  for (auto& [word, span] : Words(text)) {
    std::string_view base = word;
    if (EndsWith(base, "'s") && base.size() > 2 && !Auxiliaries().contains(base)) {
      base.remove_suffix(2);
    }
    tagged.push_back({word, span, LexicalClass(base)});
  }
  // Context rules, left to right.
  for (size_t i = 0; i < tagged.size(); ++i) {
    TaggedWord& t = tagged[i];
    const WordClass prev = i > 0 ? tagged[i - 1].word_class : WordClass::kPunct;
    const WordClass next = i + 1 < tagged.size() ? tagged[i + 1].word_class : WordClass::kPunct;
    if (t.text == "her" && !IsNominalModifier(next)) t.word_class = WordClass::kPronoun;
    if ((t.text == "this" || t.text == "these" || t.text == "those") && !IsNominalModifier(next) &&
        next != WordClass::kAdverb) {
      t.word_class = WordClass::kPronoun;
    }
    // Relativizer after a nominal ("the vaccines that save lives").
    if (t.text == "that" && (!IsNominalModifier(next) || prev == WordClass::kNoun ||
                             prev == WordClass::kPronoun)) {
      t.word_class = WordClass::kOther;
    }
    if (t.word_class != WordClass::kNoun) continue;
    if (i > 0 && VerbalAuxiliaries().contains(tagged[i - 1].text)) {
      t.word_class = WordClass::kVerb;
      continue;
    }
    const bool after_nominal_start =
        prev == WordClass::kDeterminer || prev == WordClass::kPossessive ||
        prev == WordClass::kAdjective || prev == WordClass::kNumber ||
        (prev == WordClass::kNoun && CompoundHeads().contains(t.text));
    if (after_nominal_start) continue;
    // Object of a preceding verb ("save lives"), unless it is a participle.
    const bool object_position = prev == WordClass::kVerb && !EndsWith(t.text, "ing") &&
                                 !EndsWith(t.text, "ed");
    if (IsVerbForm(t.text) && !object_position) {
      t.word_class = WordClass::kVerb;
    } else if ((EndsWith(t.text, "ing") || EndsWith(t.text, "ed")) && t.text.size() > 4 &&
               (prev == WordClass::kAuxiliary || prev == WordClass::kPronoun ||
                prev == WordClass::kAdverb || prev == WordClass::kParticle)) {
      t.word_class = WordClass::kVerb;
    } else if (prev == WordClass::kParticle && tagged[i - 1].text == "to" && i + 1 < tagged.size()) {
      t.word_class = WordClass::kVerb;
    }
  }
  return tagged;
}

std::vector<NounChunk> RuleBasedChunker::Extract(std::string_view text) const {
  const std::vector<TaggedWord> tagged = Tag(text);
  std::vector<NounChunk> chunks;
  auto emit = [&](size_t first, size_t last) {
    const CharSpan span{tagged[first].span.start, tagged[last].span.end};
    chunks.push_back({std::string(span.Slice(text)), span});
  };
  size_t i = 0;
  while (i < tagged.size()) {
    const WordClass c = tagged[i].word_class;
    if (c == WordClass::kPronoun) {
      emit(i, i);
      ++i;
      continue;
    }
    if (c != WordClass::kDeterminer && c != WordClass::kPossessive && !IsNominalModifier(c)) {
      ++i;
      continue;
    }
    const size_t start = i;
    size_t j = i;
    if (c == WordClass::kDeterminer || c == WordClass::kPossessive) ++j;
    // A second determiner slot covers "all the", "all our".
    if (j < tagged.size() && j > start &&
        (tagged[j].word_class == WordClass::kDeterminer ||
         tagged[j].word_class == WordClass::kPossessive)) {
      ++j;
    }
    size_t last_noun = tagged.size();
    auto class_at = [&](size_t k) {
      return k < tagged.size() ? tagged[k].word_class : WordClass::kPunct;
    };
    while (j < tagged.size()) {
      const WordClass wc = tagged[j].word_class;
      // An adjective after the head noun opens a new phrase ("the shot last week").
      if (wc == WordClass::kAdjective && last_noun != tagged.size()) break;
      if (IsNominalModifier(wc)) {
        if (wc == WordClass::kNoun) last_noun = j;
        ++j;
        continue;
      }
      // "very long", "long and boring" inside a nominal.
      const bool intensifier = wc == WordClass::kAdverb && class_at(j + 1) == WordClass::kAdjective;
      const bool coordination =
          (tagged[j].text == "and" || tagged[j].text == "or" || tagged[j].text == ",") &&
          class_at(j - 1) == WordClass::kAdjective &&
          (class_at(j + 1) == WordClass::kAdjective ||
           (class_at(j + 1) == WordClass::kAdverb && class_at(j + 2) == WordClass::kAdjective));
      if (!intensifier && !coordination) break;
      ++j;
    }
    if (last_noun != tagged.size()) {
      emit(start, last_noun);
      i = last_noun + 1;
    } else {
      i = std::max(j, start + 1);
    }
  }
  return chunks;
}

ChunkResult ExtractNounChunks(std::string_view text, const NounChunker& chunker) {
  ChunkResult result;
  std::vector<NounChunk> raw;
  try {
    raw = chunker.Extract(text);
  } catch (const std::exception& e) {
    result.warnings.push_back(std::string("noun chunker failed: ") + e.what());
    LogWarning(result.warnings.back());
    return result;
  }
  for (NounChunk& chunk : raw) {
    if (!chunk.span.ValidFor(text) || chunk.span.Slice(text) != chunk.text) {
      result.warnings.push_back("dropping invalid chunk '" + chunk.text + "'");
      continue;
    }
    result.chunks.push_back(std::move(chunk));
  }
  std::stable_sort(result.chunks.begin(), result.chunks.end(),
                   [](const NounChunk& a, const NounChunk& b) { return a.span.start < b.span.start; });
  return result;
}

}  // namespace np2io
