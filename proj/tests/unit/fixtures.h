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

#ifndef NP2IO_TESTS_UNIT_FIXTURES_H_
#define NP2IO_TESTS_UNIT_FIXTURES_H_

#include <string>
#include <vector>

#include "np2io/common/rng.h"
#include "np2io/corpus/example.h"

namespace np2io::testing {

inline LabeledExample MakeExample(std::string id, std::string text, std::string phrase,
                                  Label label) {
  return LabeledExample{Post{std::move(id), std::move(text)}, std::move(phrase), label};
}

// Numbered examples whose phrase always occurs in the post.
inline std::vector<LabeledExample> NumberedExamples(size_t n, uint64_t seed = 1) {
  static const char* kPhrases[] = {"vaccines", "bill gates", "the government", "we",
                                   "microchips", "big pharma", "my kids", "doctors"};
  Rng rng(seed);
  std::vector<LabeledExample> out;
  for (size_t i = 0; i < n; ++i) {
    const std::string phrase = kPhrases[rng.UniformIndex(8)];
    out.push_back(MakeExample("p" + std::to_string(i),
                              "post " + std::to_string(i) + " says " + phrase + " matter",
                              phrase, LabelFromIndex(rng.UniformIndex(3))));
  }
  return out;
}

}  // namespace np2io::testing

#endif  // NP2IO_TESTS_UNIT_FIXTURES_H_
