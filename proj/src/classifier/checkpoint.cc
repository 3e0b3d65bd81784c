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

#include "np2io/classifier/checkpoint.h"

#include <sstream>

#include "json.hpp"
#include "np2io/classifier/model_config.h"
#include "np2io/classifier/safetensors.h"
#include "np2io/common/errors.h"
#include "np2io/common/files.h"

namespace np2io {
namespace {

using nlohmann::json;

constexpr char kFormat[] = "np2io-checkpoint/1";

}  // namespace

TokenClassifier Checkpoint::ToClassifier() const {
  return TokenClassifier(params, vocab, static_cast<size_t>(config.max_len));
}

void SaveCheckpoint(const Checkpoint& checkpoint, const std::filesystem::path& dir) {
  ModelParams<float> params = checkpoint.params;
  const std::string weights = SerializeSafetensors(ParamsToTensors(params));
  const std::string vocab = checkpoint.vocab.Serialize();
  json manifest = {
      {"format", kFormat},
      {"training_config", ToJson(checkpoint.config)},
      {"encoder_config", ToJson(checkpoint.params.config)},
      {"dataset_fingerprint", checkpoint.dataset_fingerprint},
      {"train_loss", checkpoint.train_loss},
      {"validation_loss", checkpoint.validation_loss},
      {"best_epoch", checkpoint.best_epoch},
      {"skipped_examples", checkpoint.skipped_examples},
      {"files", {{kWeightsFile, Sha256Hex(weights)}, {kVocabFile, Sha256Hex(vocab)}}},
  };
  WriteFile(dir / kWeightsFile, weights);
  WriteFile(dir / kVocabFile, vocab);
  WriteFile(dir / kManifestFile, manifest.dump(2) + "\n");
}

Checkpoint LoadCheckpoint(const std::filesystem::path& dir) {
  if (!std::filesystem::exists(dir / kManifestFile)) {
    throw IoError("checkpoint " + dir.string() + ": missing " + kManifestFile);
  }
  json manifest;
  try {
    manifest = json::parse(ReadFile(dir / kManifestFile));
  } catch (const json::exception& e) {
    throw IoError("checkpoint " + dir.string() + ": unreadable manifest: " + e.what());
  }
  if (manifest.value("format", "") != kFormat) {
    throw IoError("checkpoint " + dir.string() + ": unknown format " +
                  manifest.value("format", std::string("<none>")));
  }
  std::vector<std::string> diff;
  std::map<std::string, std::string> contents;
  for (const char* name : {kWeightsFile, kVocabFile}) {
    const std::string expected = manifest["files"].value(name, "");
    if (!std::filesystem::exists(dir / name)) {
      diff.push_back(std::string(name) + ": expected sha256 " + expected + ", file missing");
      continue;
    }
    contents[name] = ReadFile(dir / name);
    const std::string actual = Sha256Hex(contents[name]);
    if (actual != expected) {
      diff.push_back(std::string(name) + ": expected sha256 " + expected + ", found " + actual);
    }
  }
  if (!diff.empty()) {
    std::string message = "checkpoint " + dir.string() + " does not match its manifest:";
    for (const auto& d : diff) message += "\n  " + d;
    throw IoError(message);
  }
  Checkpoint cp;
  try {
    cp.config = TrainingConfigFromJson(manifest.at("training_config"));
    const EncoderConfig encoder = EncoderConfigFromJson(manifest.at("encoder_config"));
    cp.dataset_fingerprint = manifest.at("dataset_fingerprint").get<std::string>();
    cp.train_loss = manifest.at("train_loss").get<std::vector<double>>();
    cp.validation_loss = manifest.at("validation_loss").get<std::vector<double>>();
    cp.best_epoch = manifest.at("best_epoch").get<int>();
    cp.skipped_examples = manifest.at("skipped_examples").get<size_t>();
    cp.vocab = WordPieceVocab::Parse(contents[kVocabFile]);
    bool head_missing = false;
    cp.params = ParamsFromTensors<float>(encoder, ParseSafetensors(contents[kWeightsFile]), 0,
                                         &head_missing);
    if (head_missing) throw IoError("checkpoint weights lack the classifier head");
  } catch (const json::exception& e) {
    throw IoError("checkpoint " + dir.string() + ": bad manifest field: " + e.what());
  } catch (const ConfigError& e) {
    throw IoError("checkpoint " + dir.string() + ": " + e.what());
  }
  return cp;
}

std::string LossCurveCsv(const Checkpoint& checkpoint) {
  std::ostringstream out;
  out.precision(17);
  out << "epoch,train_loss,validation_loss\n";
  for (size_t e = 0; e < checkpoint.train_loss.size(); ++e) {
    out << e + 1 << ',' << checkpoint.train_loss[e] << ',';
    if (e < checkpoint.validation_loss.size()) out << checkpoint.validation_loss[e];
    out << '\n';
  }
  return out.str();
}

}  // namespace np2io
