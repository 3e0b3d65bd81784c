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

#ifndef NP2IO_CORPUS_SPLIT_H_
#define NP2IO_CORPUS_SPLIT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "np2io/corpus/example.h"

namespace np2io {

struct DatasetSplit {
  std::vector<LabeledExample> train;
  std::vector<LabeledExample> validation;
  std::vector<LabeledExample> test;
  uint64_t seed = 0;
  std::vector<std::string> warnings;
};

struct SplitSizes {
  size_t train;
  size_t validation;
  size_t test;
};

// test = round(0.10 n), validation = round(0.10 (n - test)), half-up.
SplitSizes ComputeSplitSizes(size_t n);

// Uniform shuffle under `seed`, then test / validation / train in that
// order. Unstratified. Throws ConfigError for fewer than 3 examples.
DatasetSplit SplitDataset(const std::vector<LabeledExample>& examples, uint64_t seed);

}  // namespace np2io

#endif  // NP2IO_CORPUS_SPLIT_H_
