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

#ifndef NP2IO_INFERENCE_RENDER_H_
#define NP2IO_INFERENCE_RENDER_H_

#include <string>
#include <string_view>
#include <vector>

#include "np2io/inference/predict.h"

namespace np2io {

inline constexpr char kOutsiderColor[] = "#ff6b6b";
inline constexpr char kInsiderColor[] = "#74a9ff";

struct RenderedPost {
  std::string html;  // one <div class="np2io-post"> element
  std::vector<std::string> warnings;
};

// Escaped post text with a highlighted span per predicted chunk: red for
// OUTSIDER, blue for INSIDER, unstyled for NA. When spans overlap the
// outermost (then the earliest) is kept and the others are reported.
RenderedPost RenderSpans(const Post& post, const std::vector<ChunkPrediction>& predictions);

// Complete self-contained page around rendered posts.
std::string RenderDocument(const std::vector<RenderedPost>& posts);

// Text content of the document body: tags removed, entities decoded.
std::string StripMarkup(std::string_view html);

}  // namespace np2io

#endif  // NP2IO_INFERENCE_RENDER_H_
