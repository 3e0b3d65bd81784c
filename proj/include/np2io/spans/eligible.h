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

#ifndef NP2IO_SPANS_ELIGIBLE_H_
#define NP2IO_SPANS_ELIGIBLE_H_

#include <span>
#include <vector>

#include "np2io/spans/char_span.h"
#include "np2io/spans/tokenizer.h"

namespace np2io {

// Sorted token indices covered by a labeled phrase.
using EligibleTokenSet = std::vector<size_t>;

// Index i is included iff token i is real and [s_t, e_t) intersects some
// occurrence [s, e), i.e. s_t < e and e_t > s.
EligibleTokenSet EligibleTokens(std::span<const TokenSpan> tokens,
                                std::span<const CharSpan> occurrences);

}  // namespace np2io

#endif  // NP2IO_SPANS_ELIGIBLE_H_
