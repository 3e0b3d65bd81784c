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

#ifndef NP2IO_TEXT_LEMMATIZER_H_
#define NP2IO_TEXT_LEMMATIZER_H_

#include <string>
#include <string_view>

namespace np2io::text {

// Rule-based English lemmatizer in the noun-first style of dictionary
// lemmatizers: irregular plurals from a table, then suffix rules. Input is
// expected lowercase; words of three characters or fewer are returned as-is.
std::string Lemmatize(std::string_view word);

// Per-word lemmatization of a whitespace-separated phrase.
std::string LemmatizePhrase(std::string_view phrase);

}  // namespace np2io::text

#endif  // NP2IO_TEXT_LEMMATIZER_H_
