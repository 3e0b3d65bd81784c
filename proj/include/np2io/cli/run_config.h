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

#ifndef NP2IO_CLI_RUN_CONFIG_H_
#define NP2IO_CLI_RUN_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "np2io/baselines/gbdt.h"
#include "np2io/classifier/training_config.h"

namespace np2io::cli {

// Empty paths are unset. Relative paths in a config file are resolved
// against the file's directory.
struct RunPaths {
  std::filesystem::path dataset;
  std::filesystem::path splits_dir;  // defaults to output_dir
  std::filesystem::path embeddings;
  std::filesystem::path stopwords;
  std::filesystem::path checkpoint_dir;  // defaults to output_dir/checkpoint
  std::filesystem::path output_dir;
  std::filesystem::path backbone_root;
  std::filesystem::path adversarial_seeds;
};

struct RunSeeds {
  uint64_t split = 0;
  uint64_t augment = 0;
  uint64_t model = 0;  // copied into training.seed
  uint64_t baseline = 0;
};

struct AugmentSettings {
  bool enabled = false;
  int factor = 20;
  std::string inserter = "mlm";  // "mlm" | "random"
};

struct RunConfig {
  RunPaths paths;
  TrainingConfig training;
  RunSeeds seeds;
  AugmentSettings augment;
  bool zero_shot = true;
  std::vector<int> cbow_windows = {1, 2, 5};
  GbdtOptions gbdt;

  // Throws ConfigError for invalid values or input paths that do not exist.
  void Validate() const;
  std::filesystem::path OutputDir() const;  // ConfigError when unset
  std::filesystem::path SplitsDir() const;
  std::filesystem::path CheckpointDir() const;
};

// Unknown keys are rejected. Throws ConfigError.
RunConfig RunConfigFromJson(const nlohmann::json& j, const std::filesystem::path& base_dir);
// Throws ConfigError when the file is missing or malformed.
RunConfig LoadRunConfig(const std::filesystem::path& path);
nlohmann::json ToJson(const RunConfig& config);

// Flags override the file: --seed sets every seed, --out the output dir.
void ApplyOverrides(RunConfig& config, std::optional<uint64_t> seed,
                    const std::optional<std::filesystem::path>& out);

}  // namespace np2io::cli

#endif  // NP2IO_CLI_RUN_CONFIG_H_
