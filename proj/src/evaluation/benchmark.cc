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

#include "np2io/evaluation/benchmark.h"

#include <cstdio>

#include "np2io/evaluation/zero_shot.h"
#include "np2io/inference/predict.h"

namespace np2io {
namespace {

std::string Fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string Pad(std::string s, size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

void AppendGroup(const std::optional<MetricsReport>& m, const std::string& sep, std::string& out,
                 bool blank_as_dash) {
  for (int i = 0; i < 5; ++i) {
    out += sep;
    if (!m) {
      if (blank_as_dash) out += "  -  ";
      continue;
    }
    const double v[] = {m->accuracy, m->precision_macro, m->recall_macro, m->f1_macro,
                        m->f1_weighted};
    out += Fixed3(v[i]);
  }
}

}  // namespace

absl::StatusOr<Label> PhraseModelPredictor::Predict(const LabeledExample& example) {
  absl::StatusOr<SpanPrediction> p = PredictPhrase(example.post, example.phrase, *model_);
  if (!p.ok()) return p.status();
  return p->predicted;
}

BenchmarkResult BenchmarkAll(const std::vector<Predictor*>& models, const DatasetSplit& split,
                             bool zero_shot, const text::StopwordSet* stopwords) {
  BenchmarkResult result;
  result.test_size = split.test.size();
  std::vector<size_t> zs;
  if (zero_shot) zs = ZeroShotIndices(split.test, split.train, text::Canonicalizer::ZeroShot(stopwords));
  result.zero_shot_size = zs.size();
  if (split.test.empty()) return result;

  std::vector<Label> golds;
  for (const LabeledExample& ex : split.test) golds.push_back(ex.label);
  std::vector<Label> zs_golds;
  for (size_t i : zs) zs_golds.push_back(golds[i]);

  for (Predictor* model : models) {
    BenchmarkRow row;
    row.model = model->name();
    std::vector<Label> preds;
    preds.reserve(split.test.size());
    for (const LabeledExample& ex : split.test) {
      absl::StatusOr<Label> p = model->Predict(ex);
      if (p.ok()) {
        preds.push_back(*p);
      } else {
        if (row.errors++ == 0) row.first_error = std::string(p.status().message());
        preds.push_back(Label::kNa);
      }
    }
    row.test = ComputeMetrics(preds, golds);
    if (!zs.empty()) {
      std::vector<Label> zs_preds;
      for (size_t i : zs) zs_preds.push_back(preds[i]);
      row.zero_shot = ComputeMetrics(zs_preds, zs_golds);
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

std::string BenchmarkCsv(const BenchmarkResult& result) {
  std::string out = "model,acc,p,r,f1,f1w,zs_acc,zs_p,zs_r,zs_f1,zs_f1w\n";
  for (const BenchmarkRow& row : result.rows) {
    out += row.model;
    AppendGroup(row.test, ",", out, false);
    AppendGroup(row.zero_shot, ",", out, false);
    out += "\n";
  }
  return out;
}

std::string BenchmarkTable(const BenchmarkResult& result) {
  size_t width = 5;
  for (const BenchmarkRow& row : result.rows) width = std::max(width, row.model.size());
  std::string out = Pad("", width) + "   test (n=" + std::to_string(result.test_size) +
                    ")                  zero-shot (n=" + std::to_string(result.zero_shot_size) +
                    ")\n";
  static const char* kColumns[] = {"acc", "p", "r", "f1", "f1w"};
  std::string header = Pad("model", width) + " ";
  for (int group = 0; group < 2; ++group) {
    for (const char* c : kColumns) header += "  " + Pad(c, 5);
    header += " ";
  }
  out += header + " errors\n";
  for (const BenchmarkRow& row : result.rows) {
    std::string line = Pad(row.model, width) + " ";
    AppendGroup(row.test, "  ", line, true);
    line += " ";
    AppendGroup(row.zero_shot, "  ", line, true);
    line += "  " + std::to_string(row.errors);
    out += line + "\n";
  }
  return out;
}

}  // namespace np2io
