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

#include "np2io/corpus/histogram.h"

#include "json.hpp"
#include "np2io/common/text.h"
#include "np2io/text/canonical.h"

namespace np2io {

double LabelHistogram::Fraction(Label label) const {
  const long n = total();
  return n == 0 ? 0.0 : static_cast<double>(counts[Index(label)]) / static_cast<double>(n);
}

LabelHistogram ClassHistogram(const std::vector<LabeledExample>& examples,
                              const std::optional<std::string>& phrase) {
  LabelHistogram h;
  h.scope = phrase ? ToLowerUtf8(*phrase) : "all";
  const text::Canonicalizer canon = text::Canonicalizer::Lemmatized();
  const std::string query = phrase ? canon(*phrase) : std::string();
  for (const LabeledExample& ex : examples) {
    if (phrase && canon(ex.phrase) != query) continue;
    ++h.counts[Index(ex.label)];
  }
  return h;
}

std::string HistogramToJson(const LabelHistogram& histogram) {
  nlohmann::json counts;
  for (Label l : kAllLabels) counts[std::string(ToString(l))] = histogram.counts[Index(l)];
  return nlohmann::json{{"scope", histogram.scope}, {"counts", counts}}.dump(2);
}

}  // namespace np2io
