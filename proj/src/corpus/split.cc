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

#include "np2io/corpus/split.h"

#include <numeric>

#include "np2io/common/errors.h"
#include "np2io/common/log.h"
#include "np2io/common/rng.h"

namespace np2io {

SplitSizes ComputeSplitSizes(size_t n) {
  const size_t test = (n + 5) / 10;
  const size_t validation = (n - test + 5) / 10;
  return {n - test - validation, validation, test};
}

DatasetSplit SplitDataset(const std::vector<LabeledExample>& examples, uint64_t seed) {
  if (examples.size() < 3) {
    throw ConfigError("split needs at least 3 examples, got " + std::to_string(examples.size()));
  }
  const SplitSizes sizes = ComputeSplitSizes(examples.size());
  std::vector<size_t> order(examples.size());
  std::iota(order.begin(), order.end(), size_t{0});
  Rng rng(seed);
  rng.Shuffle(std::span<size_t>(order));

  DatasetSplit split;
  split.seed = seed;
  size_t k = 0;
  for (; k < sizes.test; ++k) split.test.push_back(examples[order[k]]);
  for (; k < sizes.test + sizes.validation; ++k) split.validation.push_back(examples[order[k]]);
  for (; k < order.size(); ++k) split.train.push_back(examples[order[k]]);

  if (sizes.test == 0 || sizes.validation == 0) {
    split.warnings.push_back("dataset of " + std::to_string(examples.size()) +
                             " examples yields an empty test or validation split");
    LogWarning(split.warnings.back());
  }
  return split;
}

}  // namespace np2io
