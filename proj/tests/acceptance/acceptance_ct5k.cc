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

// Acceptance criteria that need the labeled corpus, GloVe vectors or a
// pretrained DistilBERT directory. Inputs come from the environment:
//
//   NP2IO_CT5K_DATASET     labeled corpus (JSONL or CSV)
//   NP2IO_CT5K_SPLIT_DIR   optional prepared split (train/validation/test.jsonl);
//                          otherwise the corpus is split with NP2IO_CT5K_SPLIT_SEED (default 0)
//   NP2IO_GLOVE            GloVe text file for the CBOW baselines
//   NP2IO_BACKBONE_ROOT    directory holding distilbert-base-uncased/
//   NP2IO_CT5K_CHECKPOINT  optional trained checkpoint for the adversarial recalls
//   NP2IO_ACCEPT_LONG=1    enables the full augmented training run
//
// Criteria whose inputs are missing print BLOCKED. Exit status is 77 (skip)
// when nothing could run, 1 on any failure, else 0.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "np2io/baselines/cbow.h"
#include "np2io/baselines/naive_bayes.h"
#include "np2io/baselines/simple.h"
#include "np2io/classifier/checkpoint.h"
#include "np2io/classifier/finetune.h"
#include "np2io/classifier/mlm_inserter.h"
#include "np2io/classifier/registry.h"
#include "np2io/common/log.h"
#include "np2io/corpus/augment.h"
#include "np2io/corpus/dataset_io.h"
#include "np2io/corpus/split.h"
#include "np2io/evaluation/adversarial.h"
#include "np2io/evaluation/benchmark.h"
#include "np2io/evaluation/metrics.h"
#include "np2io/evaluation/zero_shot.h"
#include "reporter.h"
#include "test_paths.h"

namespace np2io::acceptance {
namespace {

namespace fs = std::filesystem;

constexpr char kBackbone[] = "distilbert-base-uncased";

std::optional<std::string> Env(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

std::vector<LabeledExample> LoadJsonl(const fs::path& path) {
  LoadResult r = LoadDataset(path, DatasetFormat::kJsonl);
  return std::move(r.examples);
}

std::optional<DatasetSplit> LoadCorpusSplit(std::string* origin) {
  if (auto dir = Env("NP2IO_CT5K_SPLIT_DIR")) {
    DatasetSplit split;
    split.train = LoadJsonl(fs::path(*dir) / "train.jsonl");
    split.validation = LoadJsonl(fs::path(*dir) / "validation.jsonl");
    split.test = LoadJsonl(fs::path(*dir) / "test.jsonl");
    *origin = "split dir " + *dir;
    return split;
  }
  const auto dataset = Env("NP2IO_CT5K_DATASET");
  if (!dataset) return std::nullopt;
  const uint64_t seed = std::stoull(Env("NP2IO_CT5K_SPLIT_SEED").value_or("0"));
  const LoadResult loaded = LoadDataset(*dataset, FormatFromPath(*dataset));
  *origin = *dataset + ", split seed " + std::to_string(seed);
  return SplitDataset(loaded.examples, seed);
}

double Accuracy(Predictor& model, const std::vector<LabeledExample>& examples) {
  std::vector<Label> preds;
  std::vector<Label> golds;
  for (const auto& ex : examples) {
    auto p = model.Predict(ex);
    preds.push_back(p.ok() ? *p : Label::kNa);
    golds.push_back(ex.label);
  }
  return ComputeMetrics(preds, golds).accuracy;
}

bool Within(double value, double target, double tol) { return std::abs(value - target) <= tol + 1e-12; }

void DeterministicBaselines(Reporter& r, const DatasetSplit& split) {
  std::vector<Label> golds;
  for (const auto& ex : split.test) golds.push_back(ex.label);
  const double want[] = {0.312, 0.504, 0.184};
  bool ok = true;
  std::string detail = "test size " + std::to_string(golds.size()) + ";";
  for (Label x : kAllLabels) {
    const MetricsReport m = ComputeMetrics(std::vector<Label>(golds.size(), x), golds);
    ok &= std::lround(m.accuracy * 1000) == std::lround(want[Index(x)] * 1000);
    ok &= Within(m.recall_macro, 1.0 / 3, 1e-12);
    detail += " " + std::string(ToString(x)) + " acc " + Fmt(m.accuracy, 3);
    if (x == Label::kOutsider) {
      ok &= Within(m.f1_weighted, 0.338, 1e-3);
      detail += " (F1w " + Fmt(m.f1_weighted) + ")";
    }
  }
  r.Check(ok, "1", "DET accuracies equal the test prevalences 0.312 / 0.504 / 0.184", detail);

  double total = 0;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    RandomPredictor rnd(seed);
    total += Accuracy(rnd, split.test);
  }
  r.Check(Within(total / 100, 1.0 / 3, 0.02), "2", "RND accuracy within 0.02 of 1/3 over 100 seeds",
          "mean " + Fmt(total / 100));
}

void NaiveBayes(Reporter& r, const DatasetSplit& split) {
  NaiveBayesPredictor nb(TrainNaiveBayes(split.train, false), 1);
  NaiveBayesPredictor nbl(TrainNaiveBayes(split.train, true), 2);
  const double acc_nb = Accuracy(nb, split.test);
  const double acc_nbl = Accuracy(nbl, split.test);
  const auto zero_shot = ZeroShotSubset(split.test, split.train);
  NaiveBayesPredictor nb_zs(TrainNaiveBayes(split.train, false), 1);
  const double acc_zs = zero_shot.empty() ? 0.0 : Accuracy(nb_zs, zero_shot);
  r.Check(Within(acc_nb, 0.520, 0.03) && Within(acc_nbl, 0.468, 0.03) && Within(acc_zs, 0.333, 0.03),
          "3", "NB 0.520 / NB-L 0.468 / zero-shot NB 0.333, each within 0.03",
          "NB " + Fmt(acc_nb, 3) + ", NB-L " + Fmt(acc_nbl, 3) + ", zero-shot NB " + Fmt(acc_zs, 3) +
              " on " + std::to_string(zero_shot.size()) + " examples");

  const double share = static_cast<double>(zero_shot.size()) / split.test.size();
  r.Check(share >= 0.25 && share <= 0.35, "7b", "zero-shot subset is 25-35% of the test split",
          std::to_string(zero_shot.size()) + " / " + std::to_string(split.test.size()) + " = " +
              Fmt(share, 3));
}

void Cbow(Reporter& r, const DatasetSplit& split) {
  const auto glove = Env("NP2IO_GLOVE");
  if (!glove) {
    r.Blocked("4", "CBOW-1/2/5 within 0.05 of 0.490 / 0.520 / 0.526", "NP2IO_GLOVE not set");
    return;
  }
  const text::StopwordSet& stopwords = text::StopwordSet::Default();
  std::vector<LabeledExample> all = split.train;
  all.insert(all.end(), split.test.begin(), split.test.end());
  const auto keep = CbowVocabulary(all, stopwords);
  const auto table = std::make_shared<const EmbeddingTable>(EmbeddingTable::Load(*glove, &keep));
  const int windows[] = {1, 2, 5};
  const double want[] = {0.490, 0.520, 0.526};
  bool ok = true;
  std::string detail;
  for (int i = 0; i < 3; ++i) {
    CbowPredictor model = CbowPredictor::Train(split.train, windows[i], table, &stopwords, {});
    const double acc = Accuracy(model, split.test);
    ok &= Within(acc, want[i], 0.05);
    detail += "w=" + std::to_string(windows[i]) + " " + Fmt(acc, 3) + "; ";
  }
  r.Check(ok, "4", "CBOW-1/2/5 within 0.05 of 0.490 / 0.520 / 0.526", detail);
}

TrainingConfig BestConfig(int epochs) {
  TrainingConfig config;  // batch 64, 2 trainable layers, lr 1e-6
  config.backbone_id = kBackbone;
  config.epochs = epochs;
  config.grid_mode = true;
  return config;
}

double ModelAccuracy(const Checkpoint& cp, const std::vector<LabeledExample>& test) {
  PhraseModelPredictor model("NP2IO", std::make_shared<TokenClassifier>(cp.ToClassifier()));
  return Accuracy(model, test);
}

std::optional<Checkpoint> FineTuning(Reporter& r, const DatasetSplit& split,
                                     const std::optional<std::string>& root) {
  if (!root) {
    r.Blocked("5c", "500 examples, 3 epochs, best grid config beats DET-O's 0.504",
              "NP2IO_BACKBONE_ROOT not set");
    r.Blocked("5d", "full augmented run reaches test accuracy 0.60", "NP2IO_BACKBONE_ROOT not set");
    return std::nullopt;
  }
  const BackboneRegistry registry(*root);
  {
    const std::vector<LabeledExample> small(split.train.begin(),
                                            split.train.begin() + std::min<size_t>(500, split.train.size()));
    const Checkpoint cp = Finetune(small, split.validation, BestConfig(3), registry);
    const double acc = ModelAccuracy(cp, split.test);
    r.Check(acc > 0.504, "5c", "500 examples, 3 epochs, best grid config beats DET-O's 0.504",
            "test accuracy " + Fmt(acc, 3) + " (best epoch " + std::to_string(cp.best_epoch + 1) + ")");
  }
  if (Env("NP2IO_ACCEPT_LONG") != "1") {
    r.Blocked("5d", "full augmented run reaches test accuracy 0.60", "NP2IO_ACCEPT_LONG not set");
    return std::nullopt;
  }
  std::vector<std::string> corpus;
  for (const auto& ex : split.train) corpus.push_back(ex.post.text);
  Backbone backbone = registry.Load(kBackbone, corpus, 7);
  const MaskedLmInserter inserter(std::make_shared<const ModelParams<float>>(std::move(backbone.params)),
                                  std::move(backbone.vocab));
  const auto augmented = Augment(split.train, 20, inserter, 0);
  Checkpoint cp = Finetune(augmented, split.validation, BestConfig(10), registry);
  const double acc = ModelAccuracy(cp, split.test);
  r.Check(acc >= 0.60, "5d", "full augmented run reaches test accuracy 0.60",
          "test accuracy " + Fmt(acc, 3) + " on " + std::to_string(augmented.size()) +
              " augmented training examples");
  return cp;
}

void AdversarialRecalls(Reporter& r, std::optional<Checkpoint> trained,
                        const std::optional<std::string>& root) {
  if (auto dir = Env("NP2IO_CT5K_CHECKPOINT")) trained = LoadCheckpoint(*dir);
  if (!trained || !root) {
    r.Blocked("8b", "trained recalls within 0.15 of 0.80 / 0.89 / 0.62",
              "needs a full-run model (NP2IO_CT5K_CHECKPOINT or NP2IO_ACCEPT_LONG) and NP2IO_BACKBONE_ROOT");
    return;
  }
  const TokenClassifier model = trained->ToClassifier();
  Backbone backbone = BackboneRegistry(*root).Load(kBackbone, {}, 7);
  const MaskedLmInserter inserter(std::make_shared<const ModelParams<float>>(std::move(backbone.params)),
                                  std::move(backbone.vocab));
  const auto probes = LoadAdversarialSeeds(testing::DataDir() / "adversarial_seeds.jsonl");
  bool ok = true;
  std::string detail;
  for (const AdversarialProbe& probe : probes) {
    const double want = probe.phrase == "microchip" ? 0.80 : probe.phrase == "government" ? 0.89 : 0.62;
    const AdversarialReport rep = AdversarialRecall(model, probe, inserter, 0);
    ok &= rep.posts.size() == 100 && Within(rep.insider_recall, want, 0.15);
    detail += probe.phrase + " " + Fmt(rep.insider_recall, 2) + " (target " + Fmt(want, 2) + "); ";
  }
  r.Check(ok, "8b", "trained recalls within 0.15 of 0.80 / 0.89 / 0.62", detail);
}

}  // namespace
}  // namespace np2io::acceptance

int main() {
  using namespace np2io::acceptance;
  np2io::SetLogLevel(np2io::LogLevel::kError);
  Reporter r;
  std::string origin;
  std::optional<np2io::DatasetSplit> split;
  try {
    split = LoadCorpusSplit(&origin);
  } catch (const std::exception& e) {
    std::printf("FAIL    [load] corpus: %s\n", e.what());
    return 1;
  }
  if (!split) {
    for (const char* id : {"1", "2", "3", "4", "5c", "5d", "7b", "8b"}) {
      r.Blocked(id, "corpus criterion", "NP2IO_CT5K_DATASET / NP2IO_CT5K_SPLIT_DIR not set");
    }
    std::printf("acceptance_ct5k: all %d criteria blocked\n", r.blocked());
    return 77;
  }
  std::printf("corpus: %s (%zu / %zu / %zu)\n", origin.c_str(), split->train.size(),
              split->validation.size(), split->test.size());
  const auto root = Env("NP2IO_BACKBONE_ROOT");
  try {
    DeterministicBaselines(r, *split);
    NaiveBayes(r, *split);
    Cbow(r, *split);
    AdversarialRecalls(r, FineTuning(r, *split, root), root);
  } catch (const std::exception& e) {
    r.Fail("run", "unexpected error", e.what());
  }
  std::printf("acceptance_ct5k: %d passed, %d failed, %d blocked\n", r.passed(), r.failed(),
              r.blocked());
  if (r.failed() > 0) return 1;
  return r.passed() == 0 ? 77 : 0;
}
