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

#include "np2io/evaluation/zero_shot.h"

#include <unordered_set>

namespace np2io {

std::vector<size_t> ZeroShotIndices(const std::vector<LabeledExample>& test,
                                    const std::vector<LabeledExample>& train,
                                    const text::Canonicalizer& canonicalizer) {
  std::unordered_set<std::string> seen;
  for (const LabeledExample& ex : train) seen.insert(canonicalizer(ex.phrase));
  std::vector<size_t> out;
  for (size_t i = 0; i < test.size(); ++i) {
    if (!seen.contains(canonicalizer(test[i].phrase))) out.push_back(i);
  }
  return out;
}

std::vector<LabeledExample> ZeroShotSubset(const std::vector<LabeledExample>& test,
                                           const std::vector<LabeledExample>& train,
                                           const text::Canonicalizer& canonicalizer) {
  std::vector<LabeledExample> out;
  for (size_t i : ZeroShotIndices(test, train, canonicalizer)) out.push_back(test[i]);
  return out;
}

}  // namespace np2io
