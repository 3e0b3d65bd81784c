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

#include "np2io/evaluation/adversarial.h"

#include "json.hpp"
#include "np2io/common/errors.h"
#include "np2io/common/files.h"
#include "np2io/common/text.h"
#include "np2io/inference/predict.h"
#include "np2io/spans/occurrences.h"

namespace np2io {

absl::Status AdversarialProbe::Validate() const {
  if (Trim(phrase).empty()) return absl::InvalidArgumentError("probe phrase is empty");
  if (seed_posts.empty()) {
    return absl::InvalidArgumentError("probe '" + phrase + "' has no seed posts");
  }
  if (expansion_factor < 1) return absl::InvalidArgumentError("expansion factor must be >= 1");
  for (size_t i = 0; i < seed_posts.size(); ++i) {
    if (LocatePhrase(seed_posts[i], phrase).empty()) {
      return absl::InvalidArgumentError("seed post " + std::to_string(i + 1) + " for '" + phrase +
                                        "' does not contain the phrase");
    }
  }
  return absl::OkStatus();
}

AdversarialReport AdversarialRecall(const PhraseModel& model, const AdversarialProbe& probe,
                                    const InsertionAugmenter& augmenter, uint64_t seed) {
  if (absl::Status s = probe.Validate(); !s.ok()) throw ConfigError(std::string(s.message()));
  std::vector<LabeledExample> seeds;
  for (size_t i = 0; i < probe.seed_posts.size(); ++i) {
    seeds.push_back({{"seed" + std::to_string(i + 1), probe.seed_posts[i]}, probe.phrase,
                     Label::kInsider});
  }
  AdversarialReport report;
  report.phrase = probe.phrase;
  const std::vector<LabeledExample> expanded =
      Augment(seeds, probe.expansion_factor, augmenter, seed, &report.augment);
  for (const LabeledExample& ex : expanded) {
    report.posts.push_back(ex.post.text);
    absl::StatusOr<SpanPrediction> p = PredictPhrase(ex.post, probe.phrase, model);
    report.predictions.push_back(p.ok() ? std::optional<Label>(p->predicted) : std::nullopt);
    report.insider += p.ok() && p->predicted == Label::kInsider;
  }
  report.insider_recall =
      static_cast<double>(report.insider) / static_cast<double>(report.posts.size());
  return report;
}

std::vector<AdversarialProbe> ParseAdversarialSeeds(std::string_view contents) {
  std::vector<AdversarialProbe> probes;
  size_t line_no = 0;
  while (!contents.empty()) {
    const size_t nl = contents.find('\n');
    const std::string_view line = Trim(contents.substr(0, nl));
    contents.remove_prefix(nl == std::string_view::npos ? contents.size() : nl + 1);
    ++line_no;
    if (line.empty()) continue;
    std::string phrase;
    std::string post;
    try {
      const auto j = nlohmann::json::parse(line);
      phrase = ToLowerUtf8(Trim(j.at("phrase").get<std::string>()));
      post = ToLowerUtf8(j.at("post").get<std::string>());
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("adversarial seeds line " + std::to_string(line_no) + ": " + e.what());
    }
    AdversarialProbe* probe = nullptr;
    for (AdversarialProbe& p : probes) {
      if (p.phrase == phrase) probe = &p;
    }
    if (probe == nullptr) {
      probes.push_back({phrase, {}, 20});
      probe = &probes.back();
    }
    probe->seed_posts.push_back(std::move(post));
  }
  return probes;
}

std::vector<AdversarialProbe> LoadAdversarialSeeds(const std::filesystem::path& path) {
  return ParseAdversarialSeeds(ReadFile(path));
}

std::string AdversarialReportJson(const AdversarialReport& report,
                                  std::optional<double> outsider_fraction) {
  nlohmann::ordered_json j;
  j["phrase"] = report.phrase;
  j["ct5k_outsider_fraction"] =
      outsider_fraction ? nlohmann::ordered_json(*outsider_fraction) : nlohmann::ordered_json();
  j["insider_recall"] = report.insider_recall;
  return j.dump(2) + "\n";
}

}  // namespace np2io
