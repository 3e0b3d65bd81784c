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

#ifndef NP2IO_CORPUS_EXAMPLE_H_
#define NP2IO_CORPUS_EXAMPLE_H_

#include <string>
#include <tuple>
#include <vector>

#include "np2io/corpus/label.h"

namespace np2io {

struct Post {
  std::string id;
  std::string text;  // lowercased at ingestion

  bool operator==(const Post&) const = default;
};

// One (post, noun phrase, label) triplet.
struct LabeledExample {
  Post post;
  std::string phrase;
  Label label = Label::kNa;

  bool operator==(const LabeledExample&) const = default;
};

// Identity used for split disjointness: one post yields several triplets.
using ExampleKey = std::tuple<std::string, std::string, Label>;
inline ExampleKey KeyOf(const LabeledExample& ex) { return {ex.post.id, ex.phrase, ex.label}; }

}  // namespace np2io

#endif  // NP2IO_CORPUS_EXAMPLE_H_
