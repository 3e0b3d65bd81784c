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

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "json.hpp"
#include "np2io/classifier/training_config.h"
#include "np2io/cli/app.h"
#include "np2io/cli/commands.h"
#include "np2io/cli/run_config.h"
#include "np2io/common/errors.h"
#include "np2io/common/files.h"
#include "np2io/corpus/dataset_io.h"
#include "np2io/inference/render.h"
#include "synthetic_corpus.h"
#include "test_paths.h"

namespace np2io::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "np2io");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json TinyTraining() {
  return {{"backbone_id", "scratch:d=16,l=2,h=2,ff=32,pos=64,vocab=400,min=1"},
          {"batch_size", 16},
          {"trainable_layers", 2},
          {"learning_rate", 0.003},
          {"max_len", 64},
          {"epochs", 2},
          {"patience", 2}};
}

// Writes a dataset and config into a fresh directory; returns the config path.
fs::path Workspace(const std::string& name, size_t n, json extra = json::object()) {
  const fs::path dir = np2io::testing::ScratchDir("cli_" + name);
  SaveDataset(np2io::testing::ContextualCorpus(n, 7), dir / "data.jsonl", DatasetFormat::kJsonl);
  json config = {{"paths",
                  {{"dataset", "data.jsonl"},
                   {"output_dir", "out"},
                   {"adversarial_seeds",
                    (np2io::testing::DataDir() / "adversarial_seeds.jsonl").string()}}},
                 {"training", TinyTraining()},
                 {"seeds", {{"split", 1}, {"augment", 2}, {"model", 3}, {"baseline", 4}}},
                 {"augment", {{"enabled", false}, {"factor", 2}, {"inserter", "random"}}}};
  config.merge_patch(extra);
  WriteFile(dir / "config.json", config.dump(2));
  return dir / "config.json";
}

size_t LineCount(const fs::path& p) {
  const std::string s = ReadFile(p);
  return static_cast<size_t>(std::count(s.begin(), s.end(), '\n'));
}

TEST(CliPrepareTest, SplitSizesAndDeterminism) {
  const fs::path config = Workspace("prepare", 5000);
  const fs::path out = config.parent_path() / "out";
  const CliRun r = Cli({"prepare", "--config", config.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(LineCount(out / kTrainFile), 4050u);
  EXPECT_EQ(LineCount(out / kValidationFile), 450u);
  EXPECT_EQ(LineCount(out / kTestFile), 500u);
  const json manifest = json::parse(ReadFile(out / kSplitManifestFile));
  EXPECT_EQ(manifest["seed"], 1);
  EXPECT_EQ(manifest["counts"]["test"], 500);

  const std::string first = ReadFile(out / kTrainFile);
  const std::string first_manifest = ReadFile(out / kSplitManifestFile);
  ASSERT_EQ(Cli({"prepare", "--config", config.string()}).code, 0);
  EXPECT_EQ(ReadFile(out / kTrainFile), first);
  EXPECT_EQ(ReadFile(out / kSplitManifestFile), first_manifest);

  ASSERT_EQ(Cli({"prepare", "--config", config.string(), "--seed", "9"}).code, 0);
  EXPECT_NE(ReadFile(out / kTrainFile), first);
}

TEST(CliPrepareTest, AugmentedTrainingFile) {
  const fs::path config = Workspace("augment", 100, {{"augment", {{"enabled", true}}}});
  ASSERT_EQ(Cli({"prepare", "--config", config.string()}).code, 0);
  const fs::path out = config.parent_path() / "out";
  EXPECT_EQ(LineCount(out / kAugmentedTrainFile), 2 * LineCount(out / kTrainFile));
}

TEST(CliPrepareTest, MissingInputIsUsageError) {
  const fs::path config = Workspace("missing", 10);
  fs::remove(config.parent_path() / "data.jsonl");
  const CliRun r = Cli({"prepare", "--config", config.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("not found"), std::string::npos);
  EXPECT_EQ(Cli({"prepare", "--config", "/nonexistent/config.json"}).code, 2);
  EXPECT_EQ(Cli({"prepare"}).code, 2);  // no dataset configured
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(Cli({}).code, 2);
  EXPECT_EQ(Cli({"frobnicate"}).code, 2);
  EXPECT_EQ(Cli({"stats", "--seed", "abc"}).code, 2);
  EXPECT_EQ(Cli({"probe", "--stub", "maybe", "--text", "x", "--out", "/tmp"}).code, 2);
  EXPECT_EQ(Cli({"--help"}).code, 0);
}

TEST(CliTrainTest, FrozenBackboneRunAndLossCurve) {
  json training = TinyTraining();
  training["trainable_layers"] = 0;
  const fs::path config = Workspace("train0", 120, {{"training", training}});
  const fs::path out = config.parent_path() / "out";
  ASSERT_EQ(Cli({"prepare", "--config", config.string()}).code, 0);
  const CliRun r = Cli({"train", "--config", config.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(out / "checkpoint" / "manifest.json"));
  EXPECT_EQ(ReadFile(out / kLossCurveFile).substr(0, 32), "epoch,train_loss,validation_loss");
  EXPECT_EQ(LineCount(out / kLossCurveFile), 3u);
}

TEST(CliTrainTest, InvalidLearningRateIsUsageError) {
  json training = TinyTraining();
  training["learning_rate"] = "fast";
  const fs::path config = Workspace("badlr", 30, {{"training", training}});
  EXPECT_EQ(Cli({"prepare", "--config", config.string()}).code, 2);
  json negative = TinyTraining();
  negative["learning_rate"] = -1;
  const fs::path config2 = Workspace("badlr2", 30, {{"training", negative}});
  EXPECT_EQ(Cli({"train", "--config", config2.string()}).code, 2);
}

TEST(CliTrainTest, BestGridConfigAccepted) {
  const json best = {{"backbone_id", "distilbert-base-uncased"},
                     {"batch_size", 64},
                     {"trainable_layers", 2},
                     {"learning_rate", 1e-6},
                     {"max_len", 512},
                     {"grid_mode", true}};
  const RunConfig c = RunConfigFromJson({{"training", best}}, {});
  EXPECT_NO_THROW(c.Validate());
  EXPECT_EQ(c.training.batch_size, 64);
  EXPECT_EQ(c.training.trainable_layers, 2);
  EXPECT_EQ(c.training.learning_rate, 1e-6);
}

TEST(CliTrainTest, RerunIsByteIdentical) {
  const fs::path config = Workspace("idem", 80);
  const fs::path out = config.parent_path() / "out";
  ASSERT_EQ(Cli({"prepare", "--config", config.string()}).code, 0);
  ASSERT_EQ(Cli({"train", "--config", config.string()}).code, 0);
  const std::string weights = ReadFile(out / "checkpoint" / "model.safetensors");
  const std::string manifest = ReadFile(out / "checkpoint" / "manifest.json");
  ASSERT_EQ(Cli({"train", "--config", config.string()}).code, 0);
  EXPECT_EQ(ReadFile(out / "checkpoint" / "model.safetensors"), weights);
  EXPECT_EQ(ReadFile(out / "checkpoint" / "manifest.json"), manifest);
}

TEST(CliTrainTest, CorruptCheckpointIsRuntimeFailure) {
  const fs::path config = Workspace("corrupt", 60);
  const fs::path out = config.parent_path() / "out";
  ASSERT_EQ(Cli({"prepare", "--config", config.string()}).code, 0);
  ASSERT_EQ(Cli({"train", "--config", config.string()}).code, 0);
  WriteFile(out / "checkpoint" / "vocab.txt", "[PAD]\n");
  const CliRun r = Cli({"probe", "--config", config.string(), "--text", "we trust the cdc"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("sha256"), std::string::npos);
}

TEST(CliEvaluateTest, ModelSetsAndZeroShotGroup) {
  const fs::path config = Workspace("eval", 300);
  const fs::path dir = config.parent_path();
  WriteFile(dir / "emb.txt",
            "trust 1 0 0\nlove 1 0.1 0\nfear 0 1 0\nhate 0 1 0.1\nweather 0 0 1\ntable 0 0 1\n");
  json c = json::parse(ReadFile(config));
  c["paths"]["embeddings"] = "emb.txt";
  WriteFile(config, c.dump());
  ASSERT_EQ(Cli({"prepare", "--config", config.string()}).code, 0);
  ASSERT_EQ(Cli({"train", "--config", config.string()}).code, 0);

  CliRun r = Cli({"evaluate", "--config", config.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::string csv = ReadFile(dir / "out" / kBenchmarkCsvFile);
  EXPECT_EQ(LineCount(dir / "out" / kBenchmarkCsvFile), 11u);
  for (const std::string& name : AllModelNames()) {
    EXPECT_NE(csv.find("\n" + name + ","), std::string::npos) << name;
  }
  EXPECT_TRUE(fs::exists(dir / "out" / "nb_table.json"));

  r = Cli({"evaluate", "--config", config.string(), "--models", "det-o", "--no-zero-shot"});
  ASSERT_EQ(r.code, 0) << r.err;
  csv = ReadFile(dir / "out" / kBenchmarkCsvFile);
  EXPECT_EQ(LineCount(dir / "out" / kBenchmarkCsvFile), 2u);
  EXPECT_EQ(csv.substr(csv.size() - 6), ",,,,,\n");

  EXPECT_EQ(Cli({"evaluate", "--config", config.string(), "--models", "gpt"}).code, 2);
}

TEST(CliEvaluateTest, ZeroShotGroupPresentWhenUnseenPhrases) {
  const fs::path config = Workspace("evalzs", 40);
  const fs::path out = config.parent_path() / "out";
  ASSERT_EQ(Cli({"prepare", "--config", config.string()}).code, 0);
  // Give one test example a phrase absent from training.
  auto test = LoadDataset(out / kTestFile, DatasetFormat::kJsonl).examples;
  test[0].post.text = "we trust reeducation camps today";
  test[0].phrase = "reeducation camps";
  SaveDataset(test, out / kTestFile, DatasetFormat::kJsonl);
  const CliRun r = Cli({"evaluate", "--config", config.string(), "--models", "det-i,det-o",
                     "--zero-shot"});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string csv = ReadFile(out / kBenchmarkCsvFile);
  EXPECT_EQ(csv.find(",,"), std::string::npos) << csv;
}

TEST(CliAdversarialTest, StubRecallAndValidation) {
  const fs::path config = Workspace("adv", 50);
  const fs::path out = config.parent_path() / "out";
  const CliRun r = Cli({"adversarial", "--config", config.string(), "--phrase", "microchip",
                     "--stub", "insider"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json report = json::parse(ReadFile(out / "adversarial_microchip.json"));
  EXPECT_EQ(report["insider_recall"], 1.0);
  EXPECT_EQ(report["phrase"], "microchip");
  EXPECT_EQ(LineCount(out / "adversarial_microchip_posts.jsonl"), 100u);

  WriteFile(config.parent_path() / "bad_seeds.jsonl",
            "{\"phrase\": \"chemical\", \"post\": \"chemicals save us\"}\n"
            "{\"phrase\": \"chemical\", \"post\": \"water is wet\"}\n");
  EXPECT_EQ(Cli({"adversarial", "--config", config.string(), "--stub", "insider", "--seeds",
                 (config.parent_path() / "bad_seeds.jsonl").string()})
                .code,
            2);
  EXPECT_EQ(Cli({"adversarial", "--config", config.string(), "--stub", "insider", "--phrase",
                 "unicorns"})
                .code,
            2);
}

TEST(CliProbeTest, HtmlAndJsonOutputs) {
  const fs::path config = Workspace("probe", 10);
  const fs::path out = config.parent_path() / "out";
  const std::string text = "Tech and Bill Gates push <vaccines> & more.";
  CliRun r = Cli({"probe", "--config", config.string(), "--stub", "outsider", "--text", text});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string html = ReadFile(out / kProbeHtmlFile);
  EXPECT_EQ(StripMarkup(html), text);
  EXPECT_NE(html.find("title=\"outsider\">Bill Gates</span>"), std::string::npos) << html;
  EXPECT_NE(r.out.find("\"phrase\":\"bill gates\""), std::string::npos);

  fs::remove(out / kProbeHtmlFile);
  r = Cli({"probe", "--config", config.string(), "--stub", "outsider", "--json-only", "--text",
           text});
  ASSERT_EQ(r.code, 0);
  EXPECT_FALSE(fs::exists(out / kProbeHtmlFile));
  EXPECT_TRUE(fs::exists(out / kProbeJsonFile));

  r = Cli({"probe", "--config", config.string(), "--stub", "outsider", "--text", ""});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(StripMarkup(ReadFile(out / kProbeHtmlFile)), "");
  EXPECT_EQ(ReadFile(out / kProbeJsonFile), "");
}

TEST(CliStatsTest, HistogramJson) {
  const fs::path config = Workspace("stats", 200);
  CliRun r = Cli({"stats", "--config", config.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  json h = json::parse(r.out);
  EXPECT_EQ(h["scope"], "all");
  EXPECT_EQ(h["counts"]["insider"].get<long>() + h["counts"]["outsider"].get<long>() +
                h["counts"]["na"].get<long>(),
            200);
  r = Cli({"stats", "--config", config.string(), "--phrase", "unicorns"});
  h = json::parse(r.out);
  EXPECT_EQ(h["counts"]["outsider"], 0);

  WriteFile(config.parent_path() / "data.jsonl", "");
  r = Cli({"stats", "--config", config.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["counts"]["na"], 0);
}

TEST(RunConfigTest, UnknownKeysAndOverrides) {
  EXPECT_THROW(RunConfigFromJson({{"pathz", json::object()}}, {}), ConfigError);
  EXPECT_THROW(RunConfigFromJson({{"augment", {{"inserter", "gpt"}}}}, {}).Validate(),
               ConfigError);
  RunConfig c = RunConfigFromJson({{"paths", {{"output_dir", "rel"}}}}, "/base");
  EXPECT_EQ(c.paths.output_dir, fs::path("/base/rel"));
  EXPECT_EQ(c.CheckpointDir(), fs::path("/base/rel/checkpoint"));
  ApplyOverrides(c, 11, fs::path("/elsewhere"));
  EXPECT_EQ(c.seeds.split, 11u);
  EXPECT_EQ(c.training.seed, 11u);
  EXPECT_EQ(c.OutputDir(), fs::path("/elsewhere"));
  EXPECT_THROW(RunConfig{}.OutputDir(), ConfigError);
  const RunConfig round = RunConfigFromJson(ToJson(c), {});
  EXPECT_EQ(ToJson(round), ToJson(c));
}

}  // namespace
}  // namespace np2io::cli
