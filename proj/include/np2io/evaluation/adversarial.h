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

#ifndef NP2IO_EVALUATION_ADVERSARIAL_H_
#define NP2IO_EVALUATION_ADVERSARIAL_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "np2io/classifier/phrase_model.h"
#include "np2io/corpus/augment.h"

namespace np2io {

// Insider-oriented seed posts for one phrase, each expanded by insertion
// augmentation into `expansion_factor` posts (the seed itself included).
struct AdversarialProbe {
  std::string phrase;
  std::vector<std::string> seed_posts;
  int expansion_factor = 20;

  // InvalidArgument when there are no seeds, the factor is below 1, or a
  // seed post does not contain the phrase.
  absl::Status Validate() const;
};

struct AdversarialReport {
  std::string phrase;
  std::vector<std::string> posts;  // seeds.size() * expansion_factor
  std::vector<std::optional<Label>> predictions;  // nullopt: phrase lost past truncation
  size_t insider = 0;
  double insider_recall = 0;
  AugmentStats augment;
};

// Fraction of expanded posts on which the phrase is predicted INSIDER.
// Posts where no prediction is possible count as misses. Throws ConfigError
// for an invalid probe.
AdversarialReport AdversarialRecall(const PhraseModel& model, const AdversarialProbe& probe,
                                    const InsertionAugmenter& augmenter, uint64_t seed);

// JSONL rows {"phrase": ..., "post": ...}, grouped into probes in first-seen
// phrase order. Post text is lowercased. Throws IoError / ConfigError.
std::vector<AdversarialProbe> LoadAdversarialSeeds(const std::filesystem::path& path);
std::vector<AdversarialProbe> ParseAdversarialSeeds(std::string_view contents);

// {"phrase", "ct5k_outsider_fraction", "insider_recall"}; the fraction is
// null when no labeled corpus was supplied.
std::string AdversarialReportJson(const AdversarialReport& report,
                                  std::optional<double> outsider_fraction);

}  // namespace np2io

#endif  // NP2IO_EVALUATION_ADVERSARIAL_H_
