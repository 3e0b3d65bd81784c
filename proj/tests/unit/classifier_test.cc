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

#include <cmath>
#include <limits>

#include "model_fixtures.h"
#include "json.hpp"
#include "np2io/classifier/checkpoint.h"
#include "np2io/classifier/finetune.h"
#include "np2io/classifier/loss.h"
#include "np2io/classifier/mlm_inserter.h"
#include "np2io/classifier/network.h"
#include "np2io/classifier/optimizer.h"
#include "np2io/classifier/registry.h"
#include "np2io/classifier/safetensors.h"
#include "np2io/common/errors.h"
#include "np2io/common/files.h"
#include "np2io/spans/occurrences.h"
#include "test_paths.h"

namespace np2io {
namespace {

using testing::MakeExample;
using testing::TestVocab;
using testing::TinyBackbone;
using testing::TinyConfig;
using testing::ToyExamples;
using testing::ToyTraining;

// Ids of a short post under the test vocabulary.
std::vector<int32_t> ProbeIds() {
  return WordPieceTokenizer(TestVocab()).Tokenize("bill gates is developing vaccines").ids();
}

TEST(ForwardTest, ProbabilitiesAreNormalized) {
  const auto vocab = TestVocab();
  TokenClassifier model(InitModelParams<float>(TinyConfig(vocab.size()), 1, false), vocab, 64);
  const auto probs = model.Predict(ProbeIds());
  ASSERT_EQ(probs.size(), ProbeIds().size());
  for (const auto& p : probs) {
    for (double v : p) EXPECT_GE(v, 0.0);
    EXPECT_NEAR(p[0] + p[1] + p[2], 1.0, 1e-6);
  }
}

TEST(ForwardTest, ZeroHeadGivesUniform) {
  const auto vocab = TestVocab();
  auto params = InitModelParams<float>(TinyConfig(vocab.size()), 1, false);
  params.classifier.weight.setZero();
  params.classifier.bias.setZero();
  TokenClassifier model(std::move(params), vocab, 64);
  for (const auto& p : model.Predict(ProbeIds())) {
    for (double v : p) EXPECT_DOUBLE_EQ(v, 1.0 / 3.0);
  }
}

TEST(ForwardTest, EvaluationIsDeterministicAndTrainingIsNot) {
  const auto vocab = TestVocab();
  auto params = InitModelParams<float>(TinyConfig(vocab.size()), 2, false);
  const auto ids = ProbeIds();
  EXPECT_EQ(Forward(params, ids).logits, Forward(params, ids).logits);
  Rng a(1), b(2);
  ForwardOptions oa{&a, 0}, ob{&b, 0};
  EXPECT_NE(Forward(params, ids, oa).logits, Forward(params, ids, ob).logits);
}

TEST(ForwardTest, RejectsOverlongOrInvalidInput) {
  const auto vocab = TestVocab();
  TokenClassifier model(InitModelParams<float>(TinyConfig(vocab.size()), 1, false), vocab, 16);
  std::vector<int32_t> ids(17, vocab.cls_id());
  EXPECT_THROW(model.Predict(ids), ContractViolation);
  EXPECT_THROW(model.Predict(std::vector<int32_t>{9999}), ContractViolation);
  EXPECT_EQ(model.Tokenize(std::string(200, 'a') + " b c d e f g h i j k l m n o p q").size(),
            16u);
}

TEST(LossTest, Examples) {
  const PredictionVector uniform = {1.0 / 3, 1.0 / 3, 1.0 / 3};
  const std::vector<PredictionVector> u(6, uniform);
  EXPECT_NEAR(EligibleTokenLoss(u, {1, 2, 3, 4}, Label::kOutsider), 4 * std::log(3.0), 1e-12);
  EXPECT_NEAR(EligibleTokenLoss(u, {1, 2, 3, 4}, Label::kOutsider), 4.394, 5e-4);
  const std::vector<PredictionVector> one_hot(3, PredictionVector{0, 1, 0});
  EXPECT_EQ(EligibleTokenLoss(one_hot, {0, 1, 2}, Label::kOutsider), 0.0);
  const std::vector<PredictionVector> half(2, PredictionVector{0.5, 0.25, 0.25});
  EXPECT_NEAR(EligibleTokenLoss(half, {0, 1}, Label::kInsider), 1.386, 5e-4);
  size_t skipped = 0;
  EXPECT_EQ(EligibleTokenLoss(u, {}, Label::kNa, &skipped), 0.0);
  EXPECT_EQ(skipped, 1u);
  EXPECT_THROW(EligibleTokenLoss(u, {6}, Label::kNa), ContractViolation);
}

TEST(LossTest, AdditiveOverPartitions) {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<PredictionVector> preds(20);
    for (auto& p : preds) {
      const double a = rng.UniformReal() + 1e-3, b = rng.UniformReal() + 1e-3,
                   c = rng.UniformReal() + 1e-3;
      p = {a / (a + b + c), b / (a + b + c), c / (a + b + c)};
    }
    EligibleTokenSet all, left, right;
    for (size_t i = 0; i < 20; ++i) {
      if (!rng.Bernoulli(0.6)) continue;
      all.push_back(i);
      (rng.Bernoulli(0.5) ? left : right).push_back(i);
    }
    const Label gold = LabelFromIndex(rng.UniformIndex(3));
    EXPECT_NEAR(EligibleTokenLoss(preds, all, gold),
                EligibleTokenLoss(preds, left, gold) + EligibleTokenLoss(preds, right, gold),
                1e-9);
  }
}

TEST(LossTest, LogitLossMatchesProbabilityLoss) {
  const auto vocab = TestVocab();
  auto params = InitModelParams<float>(TinyConfig(vocab.size()), 3, false);
  TokenClassifier model(params, vocab, 64);
  const auto ids = ProbeIds();
  const EligibleTokenSet eligible = {1, 2, 3};
  const double from_logits = EligibleCrossEntropy<double>(
      Forward(params, ids).logits.cast<double>(), eligible, Label::kNa, nullptr);
  EXPECT_NEAR(from_logits, EligibleTokenLoss(model.Predict(ids), eligible, Label::kNa), 1e-9);
}

// Entries whose true gradient is zero (the key bias, for one) are compared
// against the floor instead of their own magnitude.
double RelativeError(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-4});
  return std::abs(a - b) / scale;
}

// Central differences of the eligible-token loss against Backward for every
// trainable tensor. Dropout masks are replayed from a fixed seed.
void CheckGradients(int trainable_layers, bool dropout, uint64_t seed) {
  const auto vocab = TestVocab();
  auto params = InitModelParams<double>(TinyConfig(vocab.size()), seed, false);
  // Larger weights than the 0.02 init keep the gradients well above noise.
  for (auto& view : AllViews(params)) {
    if (view.is_vector) continue;
    for (int64_t i = 0; i < view.size(); ++i) view.data[i] *= 20.0;
  }
  const auto ids = ProbeIds();
  const EligibleTokenSet eligible = {2, 3, 5};
  const Label gold = Label::kOutsider;
  auto loss_at = [&](TrainableGrads<double>* grads) {
    Rng rng(99);
    ForwardOptions options;
    options.dropout_rng = dropout ? &rng : nullptr;
    options.cache_layers = trainable_layers;
    const auto state = Forward(params, ids, options);
    Matrix<double> dlogits;
    const double loss = EligibleCrossEntropy(state.logits, eligible, gold, &dlogits);
    if (grads != nullptr) Backward(params, state, dlogits, *grads);
    return loss;
  };
  TrainableGrads<double> grads = ZeroGrads(params, trainable_layers);
  loss_at(&grads);
  const auto param_views = TrainableViews(params, trainable_layers);
  const auto grad_views = GradViews(grads, 2 - trainable_layers);
  ASSERT_EQ(param_views.size(), grad_views.size());
  const double h = 1e-6;
  double worst = 0;
  std::string worst_name;
  for (size_t t = 0; t < param_views.size(); ++t) {
    ASSERT_EQ(param_views[t].name, grad_views[t].name);
    for (int64_t i = 0; i < param_views[t].size(); ++i) {
      double& w = param_views[t].data[i];
      const double saved = w;
      w = saved + h;
      const double up = loss_at(nullptr);
      w = saved - h;
      const double down = loss_at(nullptr);
      w = saved;
      const double numeric = (up - down) / (2 * h);
      const double err = RelativeError(grad_views[t].data[i], numeric);
      if (err > worst) {
        worst = err;
        worst_name = param_views[t].name + "[" + std::to_string(i) + "]";
      }
    }
  }
  EXPECT_LT(worst, 1e-4) << "worst entry " << worst_name;
}

TEST(GradientTest, HeadMatchesFiniteDifferences) { CheckGradients(0, false, 11); }
TEST(GradientTest, TopBlockMatchesFiniteDifferences) { CheckGradients(1, false, 12); }
TEST(GradientTest, AllBlocksMatchFiniteDifferences) { CheckGradients(2, false, 13); }
TEST(GradientTest, DropoutMasksAreBackpropagated) { CheckGradients(2, true, 14); }

TEST(AdamTest, FirstStepMovesByLearningRate) {
  std::vector<double> w = {1.0, -2.0}, g = {0.5, -3.0};
  std::vector<ParamView<double>> pv = {{"w", w.data(), 1, 2, true}};
  std::vector<ParamView<double>> gv = {{"w", g.data(), 1, 2, true}};
  Adam<double> adam(0.1);
  adam.Step(pv, gv);
  EXPECT_NEAR(w[0], 0.9, 1e-6);  // bias-corrected first step is lr * sign(g)
  EXPECT_NEAR(w[1], -1.9, 1e-6);
}

TEST(FinetuneTest, OverfitsEightExamples) {
  const auto toy = ToyExamples();
  FinetuneReport report;
  const Checkpoint cp = FinetuneBackbone(TinyBackbone(1), toy, {}, ToyTraining(), &report);
  EXPECT_LE(report.epochs_run, 200);
  EXPECT_GE(EligibleTokenAccuracy(cp.ToClassifier(), toy), 0.99);
  EXPECT_LT(cp.train_loss.back(), cp.train_loss.front());
}

TEST(FinetuneTest, FrozenBackboneIsBitIdentical) {
  const auto toy = ToyExamples();
  Backbone backbone = TinyBackbone(2, 0.1);
  ModelParams<float> before = backbone.params;
  TrainingConfig config = ToyTraining();
  config.trainable_layers = 0;
  config.epochs = 5;
  const Checkpoint cp = FinetuneBackbone(std::move(backbone), toy, {}, config);
  auto after = cp.params;
  auto a = AllViews(before);
  auto b = AllViews(after);
  for (size_t t = 0; t < a.size(); ++t) {
    const bool is_head = a[t].name.rfind("classifier.", 0) == 0;
    const bool same = std::equal(a[t].data, a[t].data + a[t].size(), b[t].data);
    EXPECT_EQ(same, !is_head) << a[t].name;
  }
}

TEST(FinetuneTest, OnlyTopBlocksUpdate) {
  const auto toy = ToyExamples();
  Backbone backbone = TinyBackbone(3, 0.1);
  ModelParams<float> before = backbone.params;
  TrainingConfig config = ToyTraining();
  config.trainable_layers = 1;
  config.epochs = 3;
  auto after = FinetuneBackbone(std::move(backbone), toy, {}, config).params;
  auto a = AllViews(before);
  auto b = AllViews(after);
  for (size_t t = 0; t < a.size(); ++t) {
    const bool trainable = a[t].name.rfind("classifier.", 0) == 0 ||
                           a[t].name.find("layer.1.") != std::string::npos;
    const bool same = std::equal(a[t].data, a[t].data + a[t].size(), b[t].data);
    EXPECT_EQ(same, !trainable) << a[t].name;
  }
}

TEST(FinetuneTest, EarlyStoppingKeepsBestValidationEpoch) {
  auto toy = ToyExamples();
  std::vector<LabeledExample> train(toy.begin(), toy.begin() + 6);
  std::vector<LabeledExample> val(toy.begin() + 6, toy.end());
  TrainingConfig config = ToyTraining();
  config.epochs = 60;
  config.patience = 3;
  FinetuneReport report;
  std::vector<EpochSummary> seen;
  const Checkpoint cp = FinetuneBackbone(TinyBackbone(4), train, val, config, &report,
                                         [&](const EpochSummary& s) { seen.push_back(s); });
  ASSERT_EQ(cp.validation_loss.size(), static_cast<size_t>(report.epochs_run));
  ASSERT_EQ(seen.size(), static_cast<size_t>(report.epochs_run));
  const auto best = std::min_element(cp.validation_loss.begin(), cp.validation_loss.end());
  EXPECT_EQ(cp.best_epoch, best - cp.validation_loss.begin());
  if (report.early_stopped) {
    EXPECT_EQ(report.epochs_run, cp.best_epoch + 1 + config.patience);
  }
  // The returned weights reproduce the best validation loss.
  std::vector<PreparedExample> prepared;
  WordPieceTokenizer tok(cp.vocab);
  for (const auto& ex : val) {
    PreparedExample p;
    ASSERT_EQ(PrepareExample(ex, tok, 64, &p), PrepareStatus::kOk);
    prepared.push_back(p);
  }
  EXPECT_DOUBLE_EQ(MeanExampleLoss(cp.params, prepared), *best);
}

TEST(FinetuneTest, ErrorsAreFatal) {
  TrainingConfig config = ToyTraining();
  EXPECT_THROW(FinetuneBackbone(TinyBackbone(1), {}, {}, config), ConfigError);
  const auto toy = ToyExamples();
  EXPECT_THROW(FinetuneBackbone(TinyBackbone(1), toy, {toy[0]}, config), ConfigError);
  Backbone broken = TinyBackbone(1);
  broken.params.classifier.bias(0) = std::numeric_limits<float>::quiet_NaN();
  EXPECT_THROW(FinetuneBackbone(std::move(broken), toy, {}, config), DivergenceError);
  config.trainable_layers = 3;
  EXPECT_THROW(FinetuneBackbone(TinyBackbone(1), toy, {}, config), ConfigError);
}

TEST(FinetuneTest, TruncatedPhrasesAreSkippedAndCounted) {
  auto toy = ToyExamples();
  std::string long_post;
  for (int i = 0; i < 80; ++i) long_post += "we ";
  toy.push_back(MakeExample("9", long_post + "vaccines", "vaccines", Label::kOutsider));
  TrainingConfig config = ToyTraining();
  config.epochs = 1;
  FinetuneReport report;
  const Checkpoint cp = FinetuneBackbone(TinyBackbone(1), toy, {}, config, &report);
  EXPECT_EQ(report.skipped_truncated, 1u);
  EXPECT_EQ(cp.skipped_examples, 1u);
  EXPECT_FALSE(report.warnings.empty());
}

TEST(TrainingConfigTest, GridAndJson) {
  TrainingConfig c;
  c.grid_mode = true;
  EXPECT_NO_THROW(c.Validate());  // best grid cell
  c.learning_rate = 3e-6;
  EXPECT_THROW(c.Validate(), ConfigError);
  c.grid_mode = false;
  EXPECT_NO_THROW(c.Validate());
  EXPECT_EQ(TrainingConfigFromJson(ToJson(c)), c);
  EXPECT_THROW(TrainingConfigFromJson({{"learning_rate", "fast"}}), ConfigError);
  EXPECT_THROW(TrainingConfigFromJson({{"lr", 1e-6}}), ConfigError);
  EXPECT_THROW(TrainingConfigFromJson({{"batch_size", 0}}), ConfigError);
}

Checkpoint TrainedCheckpoint() {
  TrainingConfig config = ToyTraining();
  config.epochs = 3;
  return FinetuneBackbone(TinyBackbone(6, 0.1), ToyExamples(), {}, config);
}

TEST(CheckpointTest, RoundTripReproducesPredictionsBitwise) {
  const Checkpoint cp = TrainedCheckpoint();
  const auto dir = testing::ScratchDir("ckpt_roundtrip");
  SaveCheckpoint(cp, dir);
  const Checkpoint loaded = LoadCheckpoint(dir);
  EXPECT_EQ(loaded.config, cp.config);
  EXPECT_EQ(loaded.train_loss, cp.train_loss);
  EXPECT_EQ(loaded.dataset_fingerprint, cp.dataset_fingerprint);
  EXPECT_EQ(loaded.vocab.tokens(), cp.vocab.tokens());
  const auto ids = ProbeIds();
  EXPECT_EQ(loaded.ToClassifier().Predict(ids), cp.ToClassifier().Predict(ids));
  EXPECT_EQ(LoadCheckpoint(dir).ToClassifier().Predict(ids), loaded.ToClassifier().Predict(ids));
}

TEST(CheckpointTest, TwoSavesGiveIdenticalManifests) {
  const Checkpoint cp = TrainedCheckpoint();
  const auto a = testing::ScratchDir("ckpt_a");
  const auto b = testing::ScratchDir("ckpt_b");
  SaveCheckpoint(cp, a);
  SaveCheckpoint(cp, b);
  EXPECT_EQ(ReadFile(a / kManifestFile), ReadFile(b / kManifestFile));
  EXPECT_EQ(ReadFile(a / kWeightsFile), ReadFile(b / kWeightsFile));
  const auto manifest = nlohmann::json::parse(ReadFile(a / kManifestFile));
  EXPECT_EQ(manifest["train_loss"].size(), 3u);
  EXPECT_TRUE(manifest.contains("dataset_fingerprint"));
}

TEST(CheckpointTest, MissingManifestAndCorruptionAreExplicit) {
  const Checkpoint cp = TrainedCheckpoint();
  const auto dir = testing::ScratchDir("ckpt_corrupt");
  SaveCheckpoint(cp, dir);
  std::string weights = ReadFile(dir / kWeightsFile);
  weights.back() ^= 1;
  WriteFile(dir / kWeightsFile, weights);
  try {
    LoadCheckpoint(dir);
    FAIL() << "corrupt weights loaded";
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("model.safetensors: expected sha256"), std::string::npos)
        << e.what();
  }
  std::filesystem::remove(dir / kManifestFile);
  try {
    LoadCheckpoint(dir);
    FAIL() << "loaded without manifest";
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("missing manifest.json"), std::string::npos);
  }
}

TEST(CheckpointTest, LossCurveCsv) {
  Checkpoint cp;
  cp.train_loss = {2.5, 1.25};
  cp.validation_loss = {3, 2};
  EXPECT_EQ(LossCurveCsv(cp), "epoch,train_loss,validation_loss\n1,2.5,3\n2,1.25,2\n");
}

TEST(SafetensorsTest, RoundTripAndHalfPrecision) {
  TensorFile file;
  const float values[] = {1.5f, -2.0f, 0.0f, 3.25f, 7.0f, -0.5f};
  file.tensors["b"] = MakeTensor<float>({2, 3}, values);
  const double dvalues[] = {0.1, 0.2};
  file.tensors["a"] = MakeTensor<double>({2}, dvalues);
  file.metadata["format"] = "pt";
  const std::string bytes = SerializeSafetensors(file);
  EXPECT_EQ(bytes, SerializeSafetensors(ParseSafetensors(bytes)));
  const TensorFile parsed = ParseSafetensors(bytes);
  EXPECT_EQ(parsed.tensors.at("b").Values<float>(), std::vector<float>(values, values + 6));
  EXPECT_EQ(parsed.tensors.at("a").Values<double>(), std::vector<double>({0.1, 0.2}));
  EXPECT_EQ(parsed.metadata.at("format"), "pt");

  RawTensor half;
  half.dtype = DType::kF16;
  half.shape = {4};
  const uint16_t h[] = {0x3C00, 0xC000, 0x3555, 0x0001};  // 1, -2, ~1/3, smallest subnormal
  half.bytes.assign(reinterpret_cast<const char*>(h), sizeof(h));
  const auto hv = half.Values<double>();
  EXPECT_EQ(hv[0], 1.0);
  EXPECT_EQ(hv[1], -2.0);
  EXPECT_NEAR(hv[2], 1.0 / 3.0, 1e-3);
  EXPECT_EQ(hv[3], std::ldexp(1.0, -24));
  RawTensor bf;
  bf.dtype = DType::kBF16;
  bf.shape = {1};
  const uint16_t b[] = {0x3F00};
  bf.bytes.assign(reinterpret_cast<const char*>(b), sizeof(b));
  EXPECT_EQ(bf.Values<float>()[0], 0.5f);
  EXPECT_THROW(ParseSafetensors("abc"), IoError);
}

TEST(RegistryTest, ScratchIds) {
  EXPECT_FALSE(ParseScratchId("distilbert-base-uncased").has_value());
  const auto spec = ParseScratchId("scratch:d=32,l=3,h=4,ff=64");
  ASSERT_TRUE(spec.has_value());
  EXPECT_EQ(spec->dim, 32);
  EXPECT_EQ(spec->layers, 3);
  EXPECT_THROW(ParseScratchId("scratch:d=abc"), ConfigError);
  EXPECT_THROW(ParseScratchId("scratch:q=1"), ConfigError);
  BackboneRegistry registry;
  const Backbone bb = registry.Load("scratch:d=16,l=1,h=2,ff=32,min=1", {"vaccines kill people"}, 1);
  EXPECT_EQ(bb.params.config.dim, 16);
  EXPECT_TRUE(bb.vocab.Find("vaccines").has_value());
  EXPECT_THROW(registry.Load("scratch", {}, 1), ConfigError);
  EXPECT_THROW(registry.Load("distilbert-base-uncased", {}, 1), ConfigError);
}

TEST(RegistryTest, LoadsHuggingFaceLayoutAndRejectsOtherFamilies) {
  const auto root = testing::ScratchDir("registry");
  const auto vocab = TestVocab();
  auto params = InitModelParams<float>(TinyConfig(vocab.size()), 8, true);
  TensorFile file = ParamsToTensors(params);
  file.tensors.erase("classifier.weight");
  file.tensors.erase("classifier.bias");
  file.tensors.erase("vocab_projector.weight");  // tied to the embeddings
  WriteFile(root / "tiny-distil" / "model.safetensors", SerializeSafetensors(file));
  WriteFile(root / "tiny-distil" / "vocab.txt", vocab.Serialize());
  WriteFile(root / "tiny-distil" / "config.json", ToJson(params.config).dump());
  BackboneRegistry registry(root);
  const Backbone bb = registry.Load("tiny-distil", {}, 3);
  EXPECT_TRUE(bb.pretrained);
  EXPECT_EQ(bb.params.word_embeddings, params.word_embeddings);
  EXPECT_EQ(bb.params.blocks[1].lin2.weight, params.blocks[1].lin2.weight);
  ASSERT_TRUE(bb.params.mlm.has_value());
  EXPECT_EQ(bb.params.mlm->projector.weight, params.word_embeddings);
  EXPECT_EQ(bb.params.classifier.weight.rows(), 3);

  WriteFile(root / "tiny-bert" / "config.json", R"({"model_type": "bert", "vocab_size": 10})");
  try {
    registry.Load("tiny-bert", {}, 1);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("unsupported backbone family 'bert'"), std::string::npos);
  }
}

TEST(MlmInserterTest, InsertsWholeWordsOutsideThePhrase) {
  Backbone bb = TinyBackbone(9);
  auto params = std::make_shared<const ModelParams<float>>(bb.params);
  MlmInsertOptions options;
  options.fraction = 0.5;
  MaskedLmInserter inserter(params, bb.vocab, options);
  const std::string text = "bill gates is developing a vaccine for us";
  const auto protected_spans = FindSubstrings(text, "bill gates");
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const AugmentedText out = inserter.Augment(text, protected_spans, rng);
    EXPECT_FALSE(out.insertions.empty());
    EXPECT_EQ(ApplyInsertions(text, out.insertions), out.text);
    for (const auto& ins : out.insertions) {
      EXPECT_FALSE(ins.offset > 0 && ins.offset < 10);
    }
    EXPECT_NE(out.text.find("bill gates"), std::string::npos);
  }
  Rng r1(4), r2(4);
  EXPECT_EQ(inserter.Augment(text, protected_spans, r1).text,
            inserter.Augment(text, protected_spans, r2).text);
  const auto augmented = Augment({MakeExample("1", text, "bill gates", Label::kOutsider)}, 5,
                                 inserter, 1);
  EXPECT_EQ(augmented.size(), 5u);
}

TEST(MlmInserterTest, RequiresMaskedLmHead) {
  Backbone bb = TinyBackbone(9);
  bb.params.mlm.reset();
  EXPECT_THROW(
      MaskedLmInserter(std::make_shared<const ModelParams<float>>(bb.params), bb.vocab),
      ConfigError);
}

}  // namespace
}  // namespace np2io
