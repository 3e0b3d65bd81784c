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

#include "np2io/cli/run_config.h"

#include <set>

#include "np2io/common/errors.h"
#include "np2io/common/files.h"

namespace np2io::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

void RejectUnknown(const json& j, const std::set<std::string>& known, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

template <typename T>
void Read(const json& j, const char* key, T& out, const std::string& where) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(where + "." + key + " has the wrong type");
  }
}

void ReadPath(const json& j, const char* key, fs::path& out, const fs::path& base) {
  std::string s;
  Read(j, key, s, "paths");
  if (s.empty()) return;
  const fs::path p(s);
  out = p.is_absolute() || base.empty() ? p : base / p;
}

void RequireExists(const fs::path& p, const char* what) {
  if (!p.empty() && !fs::exists(p)) {
    throw ConfigError(std::string(what) + " not found: " + p.string());
  }
}

}  // namespace

void RunConfig::Validate() const {
  training.Validate();
  if (augment.factor < 1) throw ConfigError("augment.factor must be at least 1");
  if (augment.inserter != "mlm" && augment.inserter != "random") {
    throw ConfigError("augment.inserter must be \"mlm\" or \"random\", got \"" +
                      augment.inserter + "\"");
  }
  for (int w : cbow_windows) {
    if (w < 1) throw ConfigError("cbow window sizes must be at least 1");
  }
  if (gbdt.rounds < 1 || gbdt.max_depth < 1 || gbdt.eta <= 0 || gbdt.lambda < 0 ||
      gbdt.max_bins < 2 || gbdt.max_bins > 256) {
    throw ConfigError("invalid gbdt options");
  }
  RequireExists(paths.dataset, "dataset");
  RequireExists(paths.embeddings, "embedding table");
  RequireExists(paths.stopwords, "stopword list");
  RequireExists(paths.backbone_root, "backbone directory");
  RequireExists(paths.adversarial_seeds, "adversarial seed file");
}

fs::path RunConfig::OutputDir() const {
  if (paths.output_dir.empty()) {
    throw ConfigError("no output directory: pass --out or set paths.output_dir");
  }
  return paths.output_dir;
}

fs::path RunConfig::SplitsDir() const {
  return paths.splits_dir.empty() ? OutputDir() : paths.splits_dir;
}

fs::path RunConfig::CheckpointDir() const {
  return paths.checkpoint_dir.empty() ? OutputDir() / "checkpoint" : paths.checkpoint_dir;
}

RunConfig RunConfigFromJson(const json& j, const fs::path& base_dir) {
  RunConfig c;
  RejectUnknown(j, {"paths", "training", "seeds", "augment", "zero_shot", "baselines"}, "config");
  if (j.contains("paths")) {
    const json& p = j["paths"];
    RejectUnknown(p,
                  {"dataset", "splits_dir", "embeddings", "stopwords", "checkpoint_dir",
                   "output_dir", "backbone_root", "adversarial_seeds"},
                  "paths");
    ReadPath(p, "dataset", c.paths.dataset, base_dir);
    ReadPath(p, "splits_dir", c.paths.splits_dir, base_dir);
    ReadPath(p, "embeddings", c.paths.embeddings, base_dir);
    ReadPath(p, "stopwords", c.paths.stopwords, base_dir);
    ReadPath(p, "checkpoint_dir", c.paths.checkpoint_dir, base_dir);
    ReadPath(p, "output_dir", c.paths.output_dir, base_dir);
    ReadPath(p, "backbone_root", c.paths.backbone_root, base_dir);
    ReadPath(p, "adversarial_seeds", c.paths.adversarial_seeds, base_dir);
  }
  if (j.contains("training")) c.training = TrainingConfigFromJson(j["training"]);
  if (j.contains("seeds")) {
    const json& s = j["seeds"];
    RejectUnknown(s, {"split", "augment", "model", "baseline"}, "seeds");
    Read(s, "split", c.seeds.split, "seeds");
    Read(s, "augment", c.seeds.augment, "seeds");
    c.seeds.model = c.training.seed;
    Read(s, "model", c.seeds.model, "seeds");
    Read(s, "baseline", c.seeds.baseline, "seeds");
  } else {
    c.seeds.model = c.training.seed;
  }
  c.training.seed = c.seeds.model;
  if (j.contains("augment")) {
    const json& a = j["augment"];
    RejectUnknown(a, {"enabled", "factor", "inserter"}, "augment");
    Read(a, "enabled", c.augment.enabled, "augment");
    Read(a, "factor", c.augment.factor, "augment");
    Read(a, "inserter", c.augment.inserter, "augment");
  }
  Read(j, "zero_shot", c.zero_shot, "config");
  if (j.contains("baselines")) {
    const json& b = j["baselines"];
    RejectUnknown(b, {"cbow_windows", "gbdt"}, "baselines");
    Read(b, "cbow_windows", c.cbow_windows, "baselines");
    if (b.contains("gbdt")) {
      const json& g = b["gbdt"];
      RejectUnknown(g, {"rounds", "eta", "max_depth", "lambda", "gamma", "min_child_weight",
                        "max_bins", "base_score"},
                    "baselines.gbdt");
      Read(g, "rounds", c.gbdt.rounds, "baselines.gbdt");
      Read(g, "eta", c.gbdt.eta, "baselines.gbdt");
      Read(g, "max_depth", c.gbdt.max_depth, "baselines.gbdt");
      Read(g, "lambda", c.gbdt.lambda, "baselines.gbdt");
      Read(g, "gamma", c.gbdt.gamma, "baselines.gbdt");
      Read(g, "min_child_weight", c.gbdt.min_child_weight, "baselines.gbdt");
      Read(g, "max_bins", c.gbdt.max_bins, "baselines.gbdt");
      Read(g, "base_score", c.gbdt.base_score, "baselines.gbdt");
    }
  }
  return c;
}

RunConfig LoadRunConfig(const fs::path& path) {
  if (!fs::exists(path)) throw ConfigError("config file not found: " + path.string());
  json j;
  try {
    j = json::parse(ReadFile(path));
  } catch (const json::exception& e) {
    throw ConfigError("config file " + path.string() + ": " + e.what());
  }
  return RunConfigFromJson(j, path.parent_path());
}

json ToJson(const RunConfig& c) {
  json paths = json::object();
  auto put = [&](const char* key, const fs::path& p) {
    if (!p.empty()) paths[key] = p.string();
  };
  put("dataset", c.paths.dataset);
  put("splits_dir", c.paths.splits_dir);
  put("embeddings", c.paths.embeddings);
  put("stopwords", c.paths.stopwords);
  put("checkpoint_dir", c.paths.checkpoint_dir);
  put("output_dir", c.paths.output_dir);
  put("backbone_root", c.paths.backbone_root);
  put("adversarial_seeds", c.paths.adversarial_seeds);
  return {
      {"paths", paths},
      {"training", np2io::ToJson(c.training)},
      {"seeds",
       {{"split", c.seeds.split},
        {"augment", c.seeds.augment},
        {"model", c.seeds.model},
        {"baseline", c.seeds.baseline}}},
      {"augment",
       {{"enabled", c.augment.enabled},
        {"factor", c.augment.factor},
        {"inserter", c.augment.inserter}}},
      {"zero_shot", c.zero_shot},
      {"baselines",
       {{"cbow_windows", c.cbow_windows},
        {"gbdt",
         {{"rounds", c.gbdt.rounds},
          {"eta", c.gbdt.eta},
          {"max_depth", c.gbdt.max_depth},
          {"lambda", c.gbdt.lambda},
          {"gamma", c.gbdt.gamma},
          {"min_child_weight", c.gbdt.min_child_weight},
          {"max_bins", c.gbdt.max_bins},
          {"base_score", c.gbdt.base_score}}}}},
  };
}

void ApplyOverrides(RunConfig& config, std::optional<uint64_t> seed,
                    const std::optional<fs::path>& out) {
  if (seed) {
    config.seeds = {*seed, *seed, *seed, *seed};
    config.training.seed = *seed;
  }
  if (out) config.paths.output_dir = *out;
}

}  // namespace np2io::cli
