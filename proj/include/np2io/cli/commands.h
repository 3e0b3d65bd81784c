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

#ifndef NP2IO_CLI_COMMANDS_H_
#define NP2IO_CLI_COMMANDS_H_

#include <filesystem>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "np2io/classifier/phrase_model.h"
#include "np2io/cli/run_config.h"
#include "np2io/corpus/augment.h"
#include "np2io/corpus/split.h"

namespace np2io::cli {

// File names written into the output directory.
inline constexpr char kTrainFile[] = "train.jsonl";
inline constexpr char kValidationFile[] = "validation.jsonl";
inline constexpr char kTestFile[] = "test.jsonl";
inline constexpr char kAugmentedTrainFile[] = "train_augmented.jsonl";
inline constexpr char kRejectionsFile[] = "rejections.jsonl";
inline constexpr char kSplitManifestFile[] = "split_manifest.json";
inline constexpr char kLossCurveFile[] = "loss_curve.csv";
inline constexpr char kTrainReportFile[] = "train_report.json";
inline constexpr char kBenchmarkCsvFile[] = "benchmark.csv";
inline constexpr char kBenchmarkTextFile[] = "benchmark.txt";
inline constexpr char kHistogramFile[] = "histogram.json";
inline constexpr char kProbeHtmlFile[] = "probe.html";
inline constexpr char kProbeJsonFile[] = "probe.jsonl";

// Reads train/validation/test JSONL from a prepared directory. ConfigError
// when a file is missing.
DatasetSplit LoadSplit(const std::filesystem::path& dir);

// Trained checkpoint from the config, or a constant stand-in when `stub`
// is set.
std::shared_ptr<const PhraseModel> LoadPhraseModel(const RunConfig& config,
                                                   std::optional<Label> stub);

// Augmenter named by config.augment.inserter; `corpus` builds the
// vocabulary of scratch backbones.
std::unique_ptr<InsertionAugmenter> MakeAugmenter(const RunConfig& config,
                                                  const std::vector<std::string>& corpus);

void CmdPrepare(const RunConfig& config, std::ostream& out);

void CmdTrain(const RunConfig& config, std::ostream& out);

struct EvaluateOptions {
  std::vector<std::string> models;  // empty: the full model set
  std::optional<bool> zero_shot;    // overrides config.zero_shot
};
// Default model order.
const std::vector<std::string>& AllModelNames();
void CmdEvaluate(const RunConfig& config, const EvaluateOptions& options, std::ostream& out);

struct AdversarialOptions {
  std::optional<std::string> phrase;  // default: every phrase in the seed file
  std::filesystem::path seeds_file;   // default: config.paths.adversarial_seeds
  std::optional<Label> stub;
};
void CmdAdversarial(const RunConfig& config, const AdversarialOptions& options,
                    std::ostream& out);

struct ProbeOptions {
  std::vector<std::string> texts;
  bool json_only = false;
  std::optional<Label> stub;
};
void CmdProbe(const RunConfig& config, const ProbeOptions& options, std::ostream& out);

void CmdStats(const RunConfig& config, const std::optional<std::string>& phrase,
              std::ostream& out);

}  // namespace np2io::cli

#endif  // NP2IO_CLI_COMMANDS_H_
