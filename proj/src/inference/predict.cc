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

#include "np2io/inference/predict.h"

#include "absl/status/status.h"
#include "json.hpp"
#include "np2io/common/errors.h"
#include "np2io/spans/occurrences.h"

namespace np2io {

Label TokenArgmax(const PredictionVector& probs) {
  size_t best = 0;
  for (size_t c = 1; c < kNumLabels; ++c) {
    if (probs[c] > probs[best]) best = c;
  }
  return LabelFromIndex(best);
}

SpanPrediction MajorityVote(std::span<const PredictionVector> predictions,
                            const EligibleTokenSet& eligible, std::string phrase) {
  if (eligible.empty()) throw ContractViolation("majority vote over an empty token set");
  SpanPrediction out;
  out.phrase = std::move(phrase);
  for (size_t i : eligible) {
    if (i >= predictions.size()) throw ContractViolation("eligible index out of range");
    ++out.votes[Index(TokenArgmax(predictions[i]))];
  }
  out.predicted = ArgmaxWithTieBreak(out.votes, &out.tie_broken);
  return out;
}

absl::StatusOr<SpanPrediction> PredictSpans(const Post& post, std::string_view phrase,
                                            std::span<const CharSpan> occurrences,
                                            const PhraseModel& model) {
  if (occurrences.empty()) {
    return absl::NotFoundError("phrase '" + std::string(phrase) + "' not found in post " + post.id);
  }
  const TokenizedPost tokens = model.Tokenize(post.text);
  const EligibleTokenSet eligible = EligibleTokens(tokens.tokens, occurrences);
  if (eligible.empty()) {
    return absl::NotFoundError("phrase '" + std::string(phrase) + "' lies past the truncation point of post " +
                               post.id);
  }
  return MajorityVote(model.Predict(tokens.ids()), eligible, std::string(phrase));
}

absl::StatusOr<SpanPrediction> PredictPhrase(const Post& post, std::string_view phrase,
                                             const PhraseModel& model) {
  if (phrase.empty()) return absl::InvalidArgumentError("empty phrase");
  return PredictSpans(post, phrase, LocatePhrase(post.text, phrase), model);
}

ChunkPredictions PredictAllChunks(const Post& post, const PhraseModel& model,
                                  const NounChunker& chunker) {
  ChunkResult chunks = ExtractNounChunks(post.text, chunker);
  ChunkPredictions out;
  out.warnings = std::move(chunks.warnings);
  if (chunks.chunks.empty()) return out;
  const TokenizedPost tokens = model.Tokenize(post.text);
  const std::vector<PredictionVector> probs = model.Predict(tokens.ids());
  for (NounChunk& chunk : chunks.chunks) {
    const CharSpan span[] = {chunk.span};
    const EligibleTokenSet eligible = EligibleTokens(tokens.tokens, span);
    if (eligible.empty()) {
      out.warnings.push_back("chunk '" + chunk.text + "' lies past the truncation point");
      continue;
    }
    SpanPrediction prediction = MajorityVote(probs, eligible, chunk.text);
    out.predictions.push_back({std::move(chunk), std::move(prediction)});
  }
  return out;
}

long ConsensusVote(std::string_view phrase, const std::vector<Post>& posts,
                   const PhraseModel& model) {
  long total = 0;
  for (const Post& post : posts) {
    const absl::StatusOr<SpanPrediction> p = PredictPhrase(post, phrase, model);
    if (!p.ok()) continue;
    if (p->predicted == Label::kInsider) ++total;
    if (p->predicted == Label::kOutsider) --total;
  }
  return total;
}

std::string PredictionsToJsonl(const std::string& post_id,
                               const std::vector<ChunkPrediction>& predictions) {
  std::string out;
  for (const ChunkPrediction& p : predictions) {
    nlohmann::json votes;
    for (Label l : kAllLabels) votes[std::string(ToString(l))] = p.prediction.votes[Index(l)];
    nlohmann::json row = {{"post_id", post_id},
                          {"phrase", p.prediction.phrase},
                          {"start", p.chunk.span.start},
                          {"end", p.chunk.span.end},
                          {"predicted", std::string(ToString(p.prediction.predicted))},
                          {"tie_broken", p.prediction.tie_broken},
                          {"votes", votes}};
    out += row.dump() + "\n";
  }
  return out;
}

}  // namespace np2io
