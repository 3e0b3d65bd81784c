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

#ifndef NP2IO_EVALUATION_ZERO_SHOT_H_
#define NP2IO_EVALUATION_ZERO_SHOT_H_

#include <vector>

#include "np2io/corpus/example.h"
#include "np2io/text/canonical.h"

namespace np2io {

// Indices of test examples whose canonical phrase (lowercase, per-word
// lemma, stopwords removed) never occurs among the training phrases.
std::vector<size_t> ZeroShotIndices(const std::vector<LabeledExample>& test,
                                    const std::vector<LabeledExample>& train,
                                    const text::Canonicalizer& canonicalizer =
                                        text::Canonicalizer::ZeroShot());

std::vector<LabeledExample> ZeroShotSubset(const std::vector<LabeledExample>& test,
                                           const std::vector<LabeledExample>& train,
                                           const text::Canonicalizer& canonicalizer =
                                               text::Canonicalizer::ZeroShot());

}  // namespace np2io

#endif  // NP2IO_EVALUATION_ZERO_SHOT_H_
