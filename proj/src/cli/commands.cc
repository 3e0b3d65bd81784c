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

#include "np2io/cli/commands.h"

#include <algorithm>

#include "json.hpp"
#include "np2io/baselines/cbow.h"
#include "np2io/baselines/naive_bayes.h"
#include "np2io/baselines/simple.h"
#include "np2io/classifier/checkpoint.h"
#include "np2io/classifier/finetune.h"
#include "np2io/classifier/mlm_inserter.h"
#include "np2io/classifier/registry.h"
#include "np2io/common/errors.h"
#include "np2io/common/files.h"
#include "np2io/common/log.h"
#include "np2io/common/text.h"
#include "np2io/corpus/dataset_io.h"
#include "np2io/corpus/histogram.h"
#include "np2io/evaluation/adversarial.h"
#include "np2io/evaluation/benchmark.h"
#include "np2io/inference/constant_model.h"
#include "np2io/inference/predict.h"
#include "np2io/inference/render.h"
#include "np2io/spans/occurrences.h"

namespace np2io::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::vector<LabeledExample> LoadExamples(const fs::path& path) {
  if (!fs::exists(path)) throw ConfigError(path.string() + " not found; run `prepare` first");
  LoadResult r = LoadDataset(path, DatasetFormat::kJsonl);
  if (!r.rejections.empty()) {
    throw IoError(path.string() + " line " + std::to_string(r.rejections[0].line) + ": " +
                  r.rejections[0].reason);
  }
  return std::move(r.examples);
}

fs::path EnsureOutputDir(const RunConfig& config) {
  const fs::path dir = config.OutputDir();
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  return dir;
}

text::StopwordSet LoadStopwords(const RunConfig& config) {
  return config.paths.stopwords.empty() ? text::StopwordSet::Default()
                                        : text::StopwordSet::LoadFile(config.paths.stopwords);
}

std::vector<std::string> Texts(const std::vector<LabeledExample>& examples) {
  std::vector<std::string> out;
  out.reserve(examples.size());
  for (const auto& ex : examples) out.push_back(ex.post.text);
  return out;
}

std::string Lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// File-name-safe rendering of a phrase.
std::string Slug(std::string_view phrase) {
  std::string out;
  for (char c : phrase) out += IsWordByte(static_cast<unsigned char>(c)) ? c : '_';
  return out;
}

const std::vector<std::string> kFillerWords = {
    "really", "truly",  "just",   "also",    "still",  "actually", "definitely",
    "simply", "indeed", "surely", "clearly", "always", "honestly", "certainly"};

}  // namespace

DatasetSplit LoadSplit(const fs::path& dir) {
  DatasetSplit split;
  split.train = LoadExamples(dir / kTrainFile);
  split.validation = LoadExamples(dir / kValidationFile);
  split.test = LoadExamples(dir / kTestFile);
  return split;
}

std::shared_ptr<const PhraseModel> LoadPhraseModel(const RunConfig& config,
                                                   std::optional<Label> stub) {
  if (stub) return std::make_shared<ConstantPhraseModel>(ConstantPhraseModel::Always(*stub));
  const fs::path dir = config.CheckpointDir();
  if (!fs::exists(dir / kManifestFile)) {
    throw ConfigError("no checkpoint at " + dir.string() + "; run `train` first");
  }
  return std::make_shared<TokenClassifier>(LoadCheckpoint(dir).ToClassifier());
}

std::unique_ptr<InsertionAugmenter> MakeAugmenter(const RunConfig& config,
                                                  const std::vector<std::string>& corpus) {
  if (config.augment.inserter == "random") {
    return std::make_unique<RandomWordInserter>(kFillerWords, 1);
  }
  const BackboneRegistry registry(config.paths.backbone_root);
  Backbone backbone =
      registry.Load(config.training.backbone_id, corpus, DeriveSeed(config.seeds.augment, {7}));
  return std::make_unique<MaskedLmInserter>(
      std::make_shared<const ModelParams<float>>(std::move(backbone.params)),
      std::move(backbone.vocab));
}

void CmdPrepare(const RunConfig& config, std::ostream& out) {
  if (config.paths.dataset.empty()) throw ConfigError("paths.dataset is not set");
  if (!fs::exists(config.paths.dataset)) {
    throw ConfigError("dataset not found: " + config.paths.dataset.string());
  }
  const fs::path dir = EnsureOutputDir(config);
  const LoadResult loaded = LoadDataset(config.paths.dataset, FormatFromPath(config.paths.dataset));
  for (const Rejection& r : loaded.rejections) {
    LogWarning("record at line " + std::to_string(r.line) + " rejected: " + r.reason);
  }
  const DatasetSplit split = SplitDataset(loaded.examples, config.seeds.split);
  for (const std::string& w : split.warnings) LogWarning(w);
  SaveDataset(split.train, dir / kTrainFile, DatasetFormat::kJsonl);
  SaveDataset(split.validation, dir / kValidationFile, DatasetFormat::kJsonl);
  SaveDataset(split.test, dir / kTestFile, DatasetFormat::kJsonl);
  WriteFile(dir / kRejectionsFile, SerializeRejections(loaded.rejections));

  ordered_json manifest;
  manifest["seed"] = config.seeds.split;
  manifest["input"] = config.paths.dataset.filename().string();
  manifest["input_sha256"] = Sha256Hex(ReadFile(config.paths.dataset));
  manifest["counts"] = {{"accepted", loaded.examples.size()},
                        {"rejected", loaded.rejections.size()},
                        {"train", split.train.size()},
                        {"validation", split.validation.size()},
                        {"test", split.test.size()}};
  if (config.augment.enabled) {
    const auto augmenter = MakeAugmenter(config, Texts(split.train));
    AugmentStats stats;
    const std::vector<LabeledExample> augmented =
        Augment(split.train, config.augment.factor, *augmenter, config.seeds.augment, &stats);
    SaveDataset(augmented, dir / kAugmentedTrainFile, DatasetFormat::kJsonl);
    manifest["augment"] = {{"factor", config.augment.factor},
                           {"inserter", config.augment.inserter},
                           {"seed", config.seeds.augment},
                           {"examples", augmented.size()},
                           {"variants", stats.variants},
                           {"retries", stats.retries},
                           {"fallbacks", stats.fallbacks}};
  }
  WriteFile(dir / kSplitManifestFile, manifest.dump(2) + "\n");
  out << "prepared " << split.train.size() << " train / " << split.validation.size()
      << " validation / " << split.test.size() << " test examples in " << dir.string() << " ("
      << loaded.rejections.size() << " records rejected)\n";
}

void CmdTrain(const RunConfig& config, std::ostream& out) {
  const fs::path splits = config.SplitsDir();
  const fs::path dir = EnsureOutputDir(config);
  std::vector<LabeledExample> train;
  if (config.augment.enabled) {
    train = LoadExamples(splits / kAugmentedTrainFile);
  } else {
    train = LoadExamples(splits / kTrainFile);
  }
  const std::vector<LabeledExample> validation = LoadExamples(splits / kValidationFile);
  const BackboneRegistry registry(config.paths.backbone_root);
  FinetuneReport report;
  const Checkpoint checkpoint =
      Finetune(train, validation, config.training, registry, &report, [&](const EpochSummary& e) {
        out << "epoch " << e.epoch << " train_loss " << e.train_loss << " validation_loss "
            << e.validation_loss << "\n";
      });
  SaveCheckpoint(checkpoint, config.CheckpointDir());
  WriteFile(dir / kLossCurveFile, LossCurveCsv(checkpoint));
  ordered_json rep;
  rep["best_epoch"] = checkpoint.best_epoch + 1;
  rep["epochs_run"] = report.epochs_run;
  rep["early_stopped"] = report.early_stopped;
  rep["train_examples"] = train.size();
  rep["skipped_no_occurrence"] = report.skipped_no_occurrence;
  rep["skipped_truncated"] = report.skipped_truncated;
  rep["warnings"] = report.warnings;
  WriteFile(dir / kTrainReportFile, rep.dump(2) + "\n");
  out << "checkpoint (best epoch " << checkpoint.best_epoch + 1 << ") written to "
      << config.CheckpointDir().string() << "\n";
}

const std::vector<std::string>& AllModelNames() {
  static const std::vector<std::string> kNames = {"RND", "DET-I",  "DET-O",  "DET-NA", "NB",
                                                  "NB-L", "CBOW-1", "CBOW-2", "CBOW-5", "NP2IO"};
  return kNames;
}

void CmdEvaluate(const RunConfig& config, const EvaluateOptions& options, std::ostream& out) {
  std::vector<std::string> names = options.models;
  if (names.empty()) {
    names = {"RND", "DET-I", "DET-O", "DET-NA", "NB", "NB-L"};
    for (int w : config.cbow_windows) names.push_back("CBOW-" + std::to_string(w));
    names.push_back("NP2IO");
  }
  const DatasetSplit split = LoadSplit(config.SplitsDir());
  const fs::path dir = EnsureOutputDir(config);
  const text::StopwordSet stopwords = LoadStopwords(config);
  std::shared_ptr<const EmbeddingTable> embeddings;

  std::vector<std::unique_ptr<Predictor>> owned;
  uint64_t stream = 0;
  for (const std::string& raw : names) {
    const std::string name = Lower(raw);
    const uint64_t seed = DeriveSeed(config.seeds.baseline, {++stream});
    if (name == "rnd") {
      owned.push_back(std::make_unique<RandomPredictor>(config.seeds.baseline));
    } else if (name == "det-i" || name == "det-o" || name == "det-na") {
      const Label l = name == "det-i" ? Label::kInsider
                      : name == "det-o" ? Label::kOutsider
                                        : Label::kNa;
      owned.push_back(std::make_unique<ConstantPredictor>(l));
    } else if (name == "nb" || name == "nb-l") {
      const bool lemmatized = name == "nb-l";
      PhraseConditionalTable table = TrainNaiveBayes(split.train, lemmatized);
      WriteFile(dir / (lemmatized ? "nb_l_table.json" : "nb_table.json"),
                NaiveBayesToJson(table));
      owned.push_back(std::make_unique<NaiveBayesPredictor>(std::move(table), seed));
    } else if (name.starts_with("cbow-")) {
      int w = 0;
      try {
        w = std::stoi(name.substr(5));
      } catch (const std::exception&) {
        throw ConfigError("bad model name '" + raw + "'");
      }
      if (w < 1) throw ConfigError("bad model name '" + raw + "'");
      if (config.paths.embeddings.empty()) {
        throw ConfigError(raw + " needs paths.embeddings (GloVe-format text file)");
      }
      if (embeddings == nullptr) {
        std::vector<LabeledExample> all = split.train;
        all.insert(all.end(), split.test.begin(), split.test.end());
        const auto keep = CbowVocabulary(all, stopwords);
        embeddings =
            std::make_shared<const EmbeddingTable>(EmbeddingTable::Load(config.paths.embeddings, &keep));
      }
      owned.push_back(std::make_unique<CbowPredictor>(
          CbowPredictor::Train(split.train, w, embeddings, &stopwords, config.gbdt)));
    } else if (name == "np2io") {
      owned.push_back(std::make_unique<PhraseModelPredictor>(
          "NP2IO", LoadPhraseModel(config, std::nullopt)));
    } else {
      throw ConfigError("unknown model '" + raw + "'");
    }
  }
  std::vector<Predictor*> models;
  for (const auto& p : owned) models.push_back(p.get());
  const bool zero_shot = options.zero_shot.value_or(config.zero_shot);
  const BenchmarkResult result = BenchmarkAll(models, split, zero_shot, &stopwords);
  for (const BenchmarkRow& row : result.rows) {
    if (row.errors > 0) {
      LogWarning(row.model + ": " + std::to_string(row.errors) +
                 " examples scored as NA after errors (first: " + row.first_error + ")");
    }
  }
  WriteFile(dir / kBenchmarkCsvFile, BenchmarkCsv(result));
  const std::string table = BenchmarkTable(result);
  WriteFile(dir / kBenchmarkTextFile, table);
  out << table;
}

void CmdAdversarial(const RunConfig& config, const AdversarialOptions& options,
                    std::ostream& out) {
  const fs::path seeds_file =
      options.seeds_file.empty() ? config.paths.adversarial_seeds : options.seeds_file;
  if (seeds_file.empty()) throw ConfigError("no seed file: pass --seeds or set paths.adversarial_seeds");
  if (!fs::exists(seeds_file)) throw ConfigError("seed file not found: " + seeds_file.string());
  std::vector<AdversarialProbe> probes = LoadAdversarialSeeds(seeds_file);
  if (options.phrase) {
    const std::string wanted = ToLowerUtf8(Trim(*options.phrase));
    std::erase_if(probes, [&](const AdversarialProbe& p) { return p.phrase != wanted; });
    if (probes.empty()) throw ConfigError("phrase '" + wanted + "' has no seed posts");
  }
  for (const AdversarialProbe& p : probes) {
    if (absl::Status s = p.Validate(); !s.ok()) throw ConfigError(std::string(s.message()));
  }
  const fs::path dir = EnsureOutputDir(config);

  // Reference corpus for the outsider share: the training split when
  // prepared, else the raw dataset.
  std::optional<std::vector<LabeledExample>> reference;
  const fs::path train_path = config.SplitsDir() / kTrainFile;
  if (fs::exists(train_path)) {
    reference = LoadExamples(train_path);
  } else if (!config.paths.dataset.empty()) {
    reference = LoadDataset(config.paths.dataset, FormatFromPath(config.paths.dataset)).examples;
  }
  std::vector<std::string> corpus = reference ? Texts(*reference) : std::vector<std::string>{};
  if (corpus.empty()) {
    for (const auto& p : probes) corpus.insert(corpus.end(), p.seed_posts.begin(), p.seed_posts.end());
  }
  const auto model = LoadPhraseModel(config, options.stub);
  const auto augmenter = MakeAugmenter(config, corpus);
  for (const AdversarialProbe& probe : probes) {
    const AdversarialReport report =
        AdversarialRecall(*model, probe, *augmenter, config.seeds.augment);
    std::optional<double> outsider;
    if (reference) {
      const LabelHistogram h = ClassHistogram(*reference, probe.phrase);
      if (h.total() > 0) outsider = h.Fraction(Label::kOutsider);
    }
    const std::string json = AdversarialReportJson(report, outsider);
    WriteFile(dir / ("adversarial_" + Slug(probe.phrase) + ".json"), json);
    std::string posts;
    for (size_t i = 0; i < report.posts.size(); ++i) {
      ordered_json row;
      row["post"] = report.posts[i];
      row["predicted"] = report.predictions[i] ? ordered_json(std::string(ToString(*report.predictions[i])))
                                               : ordered_json();
      posts += row.dump() + "\n";
    }
    WriteFile(dir / ("adversarial_" + Slug(probe.phrase) + "_posts.jsonl"), posts);
    out << json;
  }
}

void CmdProbe(const RunConfig& config, const ProbeOptions& options, std::ostream& out) {
  const fs::path dir = EnsureOutputDir(config);
  const auto model = LoadPhraseModel(config, options.stub);
  const RuleBasedChunker chunker;
  std::vector<RenderedPost> rendered;
  std::string jsonl;
  for (size_t i = 0; i < options.texts.size(); ++i) {
    const std::string id = "probe-" + std::to_string(i + 1);
    // Lowercasing keeps byte offsets, so spans found on the lowercased text
    // apply to the original.
    const Post lowered{id, ToLowerUtf8(options.texts[i])};
    const ChunkPredictions preds = PredictAllChunks(lowered, *model, chunker);
    for (const std::string& w : preds.warnings) LogWarning(id + ": " + w);
    jsonl += PredictionsToJsonl(id, preds.predictions);
    if (!options.json_only) {
      RenderedPost r = RenderSpans(Post{id, options.texts[i]}, preds.predictions);
      for (const std::string& w : r.warnings) LogWarning(id + ": " + w);
      rendered.push_back(std::move(r));
    }
  }
  WriteFile(dir / kProbeJsonFile, jsonl);
  if (!options.json_only) WriteFile(dir / kProbeHtmlFile, RenderDocument(rendered));
  out << jsonl;
}

void CmdStats(const RunConfig& config, const std::optional<std::string>& phrase,
              std::ostream& out) {
  if (config.paths.dataset.empty()) throw ConfigError("paths.dataset is not set");
  if (!fs::exists(config.paths.dataset)) {
    throw ConfigError("dataset not found: " + config.paths.dataset.string());
  }
  const fs::path dir = EnsureOutputDir(config);
  const LoadResult loaded = LoadDataset(config.paths.dataset, FormatFromPath(config.paths.dataset));
  std::optional<std::string> query;
  if (phrase) query = ToLowerUtf8(Trim(*phrase));
  const std::string json = HistogramToJson(ClassHistogram(loaded.examples, query));
  WriteFile(dir / kHistogramFile, json + "\n");
  out << json << "\n";
}

}  // namespace np2io::cli
