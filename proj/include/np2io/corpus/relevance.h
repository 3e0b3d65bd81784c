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

#ifndef NP2IO_CORPUS_RELEVANCE_H_
#define NP2IO_CORPUS_RELEVANCE_H_

#include <string>
#include <vector>

#include "np2io/corpus/example.h"

namespace np2io {

// Topic keywords used to select vaccine-hesitancy posts from a crawl.
const std::vector<std::string>& VaccineKeywords();

inline constexpr size_t kMinRelevantChars = 150;
inline constexpr size_t kMaxRelevantChars = 700;

// Keeps posts that contain at least one keyword (substring, case-insensitive)
// and whose length in code points lies in [min_chars, max_chars]. Order is
// preserved. Throws ConfigError on an empty keyword list or min >= max.
std::vector<Post> RelevanceFilter(const std::vector<Post>& posts,
                                  const std::vector<std::string>& keywords,
                                  size_t min_chars = kMinRelevantChars,
                                  size_t max_chars = kMaxRelevantChars);

}  // namespace np2io

#endif  // NP2IO_CORPUS_RELEVANCE_H_
