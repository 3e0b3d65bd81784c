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

#ifndef NP2IO_CORPUS_HISTOGRAM_H_
#define NP2IO_CORPUS_HISTOGRAM_H_

#include <optional>
#include <string>
#include <vector>

#include "np2io/corpus/example.h"

namespace np2io {

struct LabelHistogram {
  std::string scope;  // "all" or the queried phrase
  LabelCounts counts{};

  long total() const { return counts[0] + counts[1] + counts[2]; }
  // Share of `label` among counted examples; 0 when nothing was counted.
  double Fraction(Label label) const;
};

// Counts labels over all examples, or over those whose lemmatized phrase
// equals the lemmatized query.
LabelHistogram ClassHistogram(const std::vector<LabeledExample>& examples,
                              const std::optional<std::string>& phrase = std::nullopt);

// {"scope": ..., "counts": {"insider": n, "outsider": n, "na": n}}
std::string HistogramToJson(const LabelHistogram& histogram);

}  // namespace np2io

#endif  // NP2IO_CORPUS_HISTOGRAM_H_
