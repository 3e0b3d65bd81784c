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

#include "np2io/text/lemmatizer.h"

#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "np2io/common/text.h"

namespace np2io::text {
namespace {

const std::unordered_map<std::string_view, std::string_view>& Irregular() {
  static const auto* table = new std::unordered_map<std::string_view, std::string_view>{
      {"children", "child"},   {"men", "man"},           {"women", "woman"},
      {"mice", "mouse"},       {"geese", "goose"},       {"teeth", "tooth"},
      {"feet", "foot"},        {"lives", "life"},        {"wives", "wife"},
      {"knives", "knife"},     {"leaves", "leaf"},       {"wolves", "wolf"},
      {"halves", "half"},      {"selves", "self"},       {"thieves", "thief"},
      {"criteria", "criterion"}, {"phenomena", "phenomenon"}, {"viruses", "virus"},
      {"vaccinations", "vaccination"}, {"analyses", "analysis"}, {"crises", "crisis"},
      {"theses", "thesis"},    {"diagnoses", "diagnosis"}, {"oxen", "ox"},
      {"lice", "louse"},       {"dice", "die"},          {"bacteria", "bacterium"},
  };
  return *table;
}

// Words ending in 's' that are already lemmas.
const std::unordered_set<std::string_view>& Invariant() {
  static const auto* set = new std::unordered_set<std::string_view>{
      "news",   "species", "series", "means",  "gas",    "bus",     "plus",   "thus",
      "always", "perhaps", "whereas", "physics", "ethics", "politics", "economics",
      "mathematics", "covid", "aids", "sars", "texas", "christmas", "shoes",
      "canoes", "toes", "people", "police", "data", "media", "this", "yes", "lens",
  };
  return *set;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

std::string Lemmatize(std::string_view word) {
  if (word.size() <= 3) return std::string(word);
  if (auto it = Irregular().find(word); it != Irregular().end()) return std::string(it->second);
  if (Invariant().contains(word)) return std::string(word);
  if (EndsWith(word, "shoes")) return std::string(word.substr(0, word.size() - 1));
  if (EndsWith(word, "ss") || EndsWith(word, "us") || EndsWith(word, "is") ||
      EndsWith(word, "'s")) {
    return std::string(word);
  }
  if (EndsWith(word, "ies") && word.size() > 4) {
    return std::string(word.substr(0, word.size() - 3)) + "y";
  }
  if (EndsWith(word, "sses") || EndsWith(word, "xes") || EndsWith(word, "ches") ||
      EndsWith(word, "shes") || EndsWith(word, "zzes")) {
    return std::string(word.substr(0, word.size() - 2));
  }
  if (EndsWith(word, "oes")) return std::string(word.substr(0, word.size() - 2));
  if (EndsWith(word, "s")) return std::string(word.substr(0, word.size() - 1));
  return std::string(word);
}

std::string LemmatizePhrase(std::string_view phrase) {
  std::vector<std::string> out;
  for (const WordSlice& w : SplitWhitespace(phrase)) out.push_back(Lemmatize(w.text));
  return JoinWords(out);
}

}  // namespace np2io::text
