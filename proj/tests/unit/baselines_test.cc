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

#include <array>
#include <cmath>

#include "fixtures.h"
#include "np2io/baselines/cbow.h"
#include "np2io/baselines/embeddings.h"
#include "np2io/baselines/gbdt.h"
#include "np2io/baselines/naive_bayes.h"
#include "np2io/baselines/simple.h"
#include "np2io/common/errors.h"

namespace np2io {
namespace {

using testing::MakeExample;

std::array<double, kNumLabels> Frequencies(Predictor& p, const LabeledExample& ex, int n) {
  std::array<double, kNumLabels> f{};
  for (int i = 0; i < n; ++i) f[Index(*p.Predict(ex))] += 1.0 / n;
  return f;
}

TEST(RandomPredictorTest, UniformOverLabels) {
  RandomPredictor rnd(17);
  const auto f = Frequencies(rnd, MakeExample("1", "x", "x", Label::kNa), 30000);
  for (double v : f) {
    EXPECT_GE(v, 0.32);
    EXPECT_LE(v, 0.35);
  }
}

TEST(RandomPredictorTest, SameSeedSameStream) {
  RandomPredictor a(3);
  RandomPredictor b(3);
  RandomPredictor c(4);
  int differ = 0;
  for (int i = 0; i < 200; ++i) {
    const Label x = a.Next();
    EXPECT_EQ(x, b.Next());
    differ += x != c.Next();
  }
  EXPECT_GT(differ, 0);
  EXPECT_EQ(a.name(), "RND");
}

TEST(ConstantPredictorTest, NamesAndOutput) {
  const auto ex = MakeExample("1", "vaccines kill", "vaccines", Label::kInsider);
  for (Label l : kAllLabels) {
    ConstantPredictor p(l);
    EXPECT_EQ(*p.Predict(ex), l);
  }
  EXPECT_EQ(ConstantPredictor(Label::kInsider).name(), "DET-I");
  EXPECT_EQ(ConstantPredictor(Label::kOutsider).name(), "DET-O");
  EXPECT_EQ(ConstantPredictor(Label::kNa).name(), "DET-NA");
}

std::vector<LabeledExample> NbTrainSet() {
  return {MakeExample("1", "the vaccines work", "the vaccines", Label::kInsider),
          MakeExample("2", "the vaccines help", "the vaccines", Label::kInsider),
          MakeExample("3", "the vaccines save", "the vaccines", Label::kInsider),
          MakeExample("4", "the vaccines kill", "the vaccines", Label::kOutsider),
          MakeExample("5", "bill gates lies", "Bill Gates", Label::kOutsider),
          MakeExample("6", "bill gates gives", "bill gates", Label::kInsider)};
}

TEST(NaiveBayesTest, MajorityCountAndTies) {
  NaiveBayesPredictor nb(TrainNaiveBayes(NbTrainSet(), false), 1);
  EXPECT_EQ(nb.PredictPhrase("the vaccines"), Label::kInsider);
  EXPECT_EQ(nb.ties(), 0u);
  // One INSIDER, one OUTSIDER: tie resolved toward OUTSIDER and counted.
  EXPECT_EQ(nb.PredictPhrase("BILL GATES"), Label::kOutsider);
  EXPECT_EQ(nb.ties(), 1u);
  EXPECT_EQ(nb.unseen(), 0u);
  EXPECT_EQ(nb.name(), "NB");
}

TEST(NaiveBayesTest, UnseenPhraseIsUniform) {
  NaiveBayesPredictor nb(TrainNaiveBayes(NbTrainSet(), false), 9);
  const auto f = Frequencies(nb, MakeExample("x", "the vaccine works", "the vaccine", Label::kNa),
                             30000);
  for (double v : f) {
    EXPECT_GE(v, 0.32);
    EXPECT_LE(v, 0.35);
  }
  EXPECT_EQ(nb.unseen(), 30000u);
}

TEST(NaiveBayesTest, LemmatizedVariantMergesInflections) {
  NaiveBayesPredictor nbl(TrainNaiveBayes(NbTrainSet(), true), 1);
  EXPECT_EQ(nbl.name(), "NB-L");
  for (int i = 0; i < 50; ++i) EXPECT_EQ(nbl.PredictPhrase("the vaccine"), Label::kInsider);
  EXPECT_EQ(nbl.unseen(), 0u);
}

TEST(NaiveBayesTest, IgnoresPostText) {
  const auto table = TrainNaiveBayes(testing::NumberedExamples(300, 4), false);
  NaiveBayesPredictor a(table, 5);
  NaiveBayesPredictor b(table, 5);
  Rng rng(8);
  static const char* kPhrases[] = {"vaccines", "we", "doctors", "never seen", "my kids"};
  for (int i = 0; i < 500; ++i) {
    const std::string phrase = kPhrases[rng.UniformIndex(5)];
    const auto x = MakeExample("a", "some post about " + phrase, phrase, Label::kNa);
    const auto y =
        MakeExample("b", phrase + " in a completely different " + std::to_string(i), phrase,
                    Label::kInsider);
    EXPECT_EQ(*a.Predict(x), *b.Predict(y));
  }
}

TEST(NaiveBayesTest, JsonRoundTrip) {
  const auto table = TrainNaiveBayes(NbTrainSet(), true);
  const std::string json = NaiveBayesToJson(table);
  EXPECT_EQ(NaiveBayesFromJson(json), table);
  EXPECT_NE(json.find("\"the vaccine\""), std::string::npos);
  EXPECT_THROW(NaiveBayesFromJson(R"({"lemmatized": true})"), ConfigError);
  EXPECT_THROW(
      NaiveBayesFromJson(R"({"lemmatized":false,"counts":{"a":{"insider":-1,"outsider":0,"na":0}}})"),
      ConfigError);
}

TEST(EmbeddingTableTest, ParsesRowsHeaderAndKeepSet) {
  const std::string text = "3 2\nbuild 1 2\ntowers 0.5 -0.5\nat&t inc 3 4\n\n";
  const EmbeddingTable all = EmbeddingTable::Parse(text);
  EXPECT_EQ(all.dim(), 2u);
  EXPECT_EQ(all.size(), 3u);
  ASSERT_NE(all.Find("at&t inc"), nullptr);
  EXPECT_EQ((*all.Find("at&t inc"))[1], 4.0f);
  EXPECT_EQ(all.Find("missing"), nullptr);
  const std::unordered_set<std::string> keep = {"towers"};
  const EmbeddingTable some = EmbeddingTable::Parse(text, &keep);
  EXPECT_EQ(some.size(), 1u);
  EXPECT_EQ((*some.Find("towers"))[0], 0.5f);
}

TEST(EmbeddingTableTest, MalformedRowsReportLine) {
  try {
    EmbeddingTable::Parse("a 1 2\nb 1\n");
    FAIL();
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(EmbeddingTable::Parse("a 1 x\n"), IoError);
  EXPECT_THROW(EmbeddingTable::Load("/nonexistent/glove.txt"), IoError);
}

EmbeddingTable ToyEmbeddings() {
  EmbeddingTable t(3);
  t.Add("build", {1, 0, 0});
  t.Add("tower", {0, 1, 0});
  t.Add("poison", {0, 0, 1});
  t.Add("protect", {2, 2, 0});
  return t;
}

TEST(CbowTest, WindowAroundFirstOccurrence) {
  const auto& stop = text::StopwordSet::Default();
  const auto words = CbowContextWords("we should build cell phone towers", "cell phone towers", 2,
                                      stop);
  ASSERT_TRUE(words.ok());
  EXPECT_EQ(*words, std::vector<std::string>{"build"});
  const auto f = CbowFeaturize("we should build cell phone towers", "cell phone towers", 2,
                               ToyEmbeddings(), stop);
  ASSERT_TRUE(f.ok());
  EXPECT_EQ(*f, (std::vector<float>{1, 0, 0}));
}

TEST(CbowTest, PhraseAtStartUsesRightContextOnly) {
  const auto& stop = text::StopwordSet::Default();
  const auto words =
      CbowContextWords("vaccines poison children, protect yourselves", "vaccines", 2, stop);
  ASSERT_TRUE(words.ok());
  EXPECT_EQ(*words, (std::vector<std::string>{"poison", "child"}));
  // Misses are skipped, not averaged in as zeros.
  const auto f = CbowFeaturize("vaccines poison children", "vaccines", 2, ToyEmbeddings(), stop);
  EXPECT_EQ(*f, (std::vector<float>{0, 0, 1}));
  const auto g = CbowFeaturize("build towers and protect us", "towers", 2, ToyEmbeddings(), stop);
  EXPECT_EQ(*g, (std::vector<float>{1.5f, 1, 0}));
}

TEST(CbowTest, StopwordOnlyContextIsZero) {
  const auto f = CbowFeaturize("they said that vaccines are for the", "vaccines", 3,
                               ToyEmbeddings(), text::StopwordSet::Default());
  ASSERT_TRUE(f.ok());
  EXPECT_EQ(*f, (std::vector<float>{0, 0, 0}));
}

TEST(CbowTest, ErrorsAsValues) {
  const auto& stop = text::StopwordSet::Default();
  EXPECT_EQ(CbowFeaturize("nothing here", "vaccines", 2, ToyEmbeddings(), stop).status().code(),
            absl::StatusCode::kNotFound);
  EXPECT_EQ(CbowFeaturize("vaccines", "vaccines", 0, ToyEmbeddings(), stop).status().code(),
            absl::StatusCode::kInvalidArgument);
}

TEST(CbowTest, PrependingTextDoesNotChangeFeature) {
  static const char* kWords[] = {"build", "tower", "poison", "protect", "the", "of",
                                 "again", "children", "now!", "and"};
  const auto& stop = text::StopwordSet::Default();
  const EmbeddingTable emb = ToyEmbeddings();
  Rng rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    std::string post;
    const size_t n = rng.UniformIndex(12);
    for (size_t i = 0; i < n; ++i) post += std::string(kWords[rng.UniformIndex(10)]) + " ";
    post += "bill gates";
    const size_t m = rng.UniformIndex(12);
    for (size_t i = 0; i < m; ++i) post += " " + std::string(kWords[rng.UniformIndex(10)]);
    std::string prefix;
    const size_t p = 1 + rng.UniformIndex(8);
    for (size_t i = 0; i < p; ++i) prefix += std::string(kWords[rng.UniformIndex(10)]) + " ";
    const int w = 1 + static_cast<int>(rng.UniformIndex(5));
    const auto a = CbowFeaturize(post, "bill gates", w, emb, stop);
    const auto b = CbowFeaturize(prefix + post, "bill gates", w, emb, stop);
    ASSERT_TRUE(a.ok() && b.ok());
    if (n >= static_cast<size_t>(w)) {
      EXPECT_EQ(*a, *b) << post;
    }
  }
}

TEST(GbdtTest, FirstRoundLeafValues) {
  // Two rows per class on one feature, softmax at p = 1/2: leaf weight
  // -G/(H + lambda) * eta = -(-1)/(1 + 1) * 0.3 = 0.15.
  GbdtOptions options;
  options.rounds = 1;
  const GbdtModel m = TrainGbdt({{0}, {0.1f}, {1}, {1.1f}}, {0, 0, 1, 1}, 2, options);
  const GbdtTree& t0 = m.trees()[0][0];
  ASSERT_EQ(t0.nodes.size(), 3u);
  EXPECT_EQ(t0.nodes[0].feature, 0);
  EXPECT_EQ(t0.nodes[0].threshold, 1.0f);
  EXPECT_NEAR(t0.nodes[1].value, 0.15, 1e-12);
  EXPECT_NEAR(t0.nodes[2].value, -0.15, 1e-12);
  EXPECT_EQ(m.Predict({0.05f}), 0);
  EXPECT_EQ(m.Predict({2.0f}), 1);
}

TEST(GbdtTest, SeparableBlobs) {
  Rng rng(12);
  const std::array<std::array<double, 4>, 3> centers = {
      {{3, 0, 0, 1}, {0, 3, 0, -1}, {0, 0, 3, 0}}};
  std::vector<std::vector<float>> x;
  std::vector<int> y;
  for (int i = 0; i < 900; ++i) {
    const int c = i % 3;
    std::vector<float> row(4);
    for (int d = 0; d < 4; ++d) row[d] = static_cast<float>(centers[c][d] + 0.5 * rng.Normal());
    x.push_back(row);
    y.push_back(c);
  }
  const GbdtModel m = TrainGbdt(x, y, 3);
  size_t correct = 0;
  for (size_t i = 0; i < x.size(); ++i) correct += m.Predict(x[i]) == y[i];
  EXPECT_GE(static_cast<double>(correct) / x.size(), 0.99);
  // Retraining is bit-identical.
  const GbdtModel again = TrainGbdt(x, y, 3);
  for (size_t i = 0; i < x.size(); i += 7) EXPECT_EQ(m.Margins(x[i]), again.Margins(x[i]));
}

TEST(GbdtTest, SingleClassIsConstant) {
  std::vector<std::string> warnings;
  const GbdtModel m = TrainGbdt({{1}, {2}, {3}}, {2, 2, 2}, 3, {}, &warnings);
  EXPECT_EQ(m.constant_class(), 2);
  EXPECT_EQ(m.Predict({-100}), 2);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_THROW(TrainGbdt({}, {}, 3), ConfigError);
  EXPECT_THROW(TrainGbdt({{1}, {1, 2}}, {0, 1}, 3), ConfigError);
  EXPECT_THROW(TrainGbdt({{1}}, {5}, 3), ConfigError);
}

TEST(CbowPredictorTest, LearnsContextCue) {
  auto emb = std::make_shared<const EmbeddingTable>(ToyEmbeddings());
  std::vector<LabeledExample> train;
  Rng rng(2);
  for (int i = 0; i < 120; ++i) {
    const size_t c = rng.UniformIndex(3);
    static const char* kCue[] = {"protect", "poison", "tower"};
    train.push_back(MakeExample(std::to_string(i),
                                std::string("they ") + kCue[c] + " bill gates today", "bill gates",
                                LabelFromIndex(c)));
  }
  train.push_back(MakeExample("missing", "no phrase here", "bill gates", Label::kNa));
  size_t skipped = 0;
  for (int w : {1, 2, 5}) {
    CbowPredictor cbow = CbowPredictor::Train(train, w, emb, nullptr, {}, &skipped);
    EXPECT_EQ(cbow.name(), "CBOW-" + std::to_string(w));
    EXPECT_EQ(skipped, 1u);
    EXPECT_EQ(*cbow.Predict(MakeExample("t", "we protect bill gates", "bill gates", Label::kNa)),
              Label::kInsider);
    EXPECT_EQ(*cbow.Predict(MakeExample("t", "poison bill gates", "bill gates", Label::kNa)),
              Label::kOutsider);
    EXPECT_FALSE(cbow.Predict(MakeExample("t", "nothing", "bill gates", Label::kNa)).ok());
  }
}

}  // namespace
}  // namespace np2io
