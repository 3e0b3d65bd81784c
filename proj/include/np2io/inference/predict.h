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

#ifndef NP2IO_INFERENCE_PREDICT_H_
#define NP2IO_INFERENCE_PREDICT_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "np2io/classifier/phrase_model.h"
#include "np2io/corpus/example.h"
#include "np2io/spans/char_span.h"
#include "np2io/spans/eligible.h"
#include "np2io/spans/noun_chunker.h"

namespace np2io {

struct SpanPrediction {
  std::string phrase;
  Label predicted = Label::kNa;
  LabelCounts votes{};  // sums to the number of eligible tokens
  bool tie_broken = false;
  bool operator==(const SpanPrediction&) const = default;
};

// Class with the highest probability; exact ties go to the lowest index.
Label TokenArgmax(const PredictionVector& probs);

// Each eligible token votes for its argmax; vote ties are resolved in the
// order OUTSIDER, INSIDER, NA. Requires a non-empty eligible set.
SpanPrediction MajorityVote(std::span<const PredictionVector> predictions,
                            const EligibleTokenSet& eligible, std::string phrase);

// Votes over every occurrence of `phrase` in the post. NotFound when the
// phrase is absent or lies entirely past the truncation point.
absl::StatusOr<SpanPrediction> PredictPhrase(const Post& post, std::string_view phrase,
                                             const PhraseModel& model);

// Votes over the given occurrence spans only.
absl::StatusOr<SpanPrediction> PredictSpans(const Post& post, std::string_view phrase,
                                            std::span<const CharSpan> occurrences,
                                            const PhraseModel& model);

struct ChunkPrediction {
  NounChunk chunk;
  SpanPrediction prediction;
};

struct ChunkPredictions {
  std::vector<ChunkPrediction> predictions;
  std::vector<std::string> warnings;
};

// One prediction per extracted chunk, each using the chunk's own span.
// Chunks past the truncation point are dropped with a warning.
ChunkPredictions PredictAllChunks(const Post& post, const PhraseModel& model,
                                  const NounChunker& chunker);

// Sum over posts containing the phrase: +1 per INSIDER, -1 per OUTSIDER.
long ConsensusVote(std::string_view phrase, const std::vector<Post>& posts,
                   const PhraseModel& model);

// JSONL rows {post_id, phrase, predicted, votes}.
std::string PredictionsToJsonl(const std::string& post_id,
                               const std::vector<ChunkPrediction>& predictions);

}  // namespace np2io

#endif  // NP2IO_INFERENCE_PREDICT_H_
