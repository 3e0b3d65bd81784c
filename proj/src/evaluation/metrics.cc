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

#include "np2io/evaluation/metrics.h"

#include <string>

#include "np2io/common/errors.h"

namespace np2io {

MetricsReport ComputeMetrics(const std::vector<Label>& predictions,
                             const std::vector<Label>& golds) {
  if (predictions.size() != golds.size()) {
    throw ContractViolation("metrics: " + std::to_string(predictions.size()) +
                            " predictions for " + std::to_string(golds.size()) + " gold labels");
  }
  if (golds.empty()) throw ContractViolation("metrics: no examples");
  MetricsReport r;
  r.count = golds.size();
  for (size_t i = 0; i < golds.size(); ++i) ++r.confusion[Index(golds[i])][Index(predictions[i])];
  long correct = 0;
  const double n = static_cast<double>(golds.size());
  for (size_t c = 0; c < kNumLabels; ++c) {
    long predicted = 0;
    long gold = 0;
    for (size_t k = 0; k < kNumLabels; ++k) {
      predicted += r.confusion[k][c];
      gold += r.confusion[c][k];
    }
    const long tp = r.confusion[c][c];
    correct += tp;
    ClassMetrics& m = r.per_class[c];
    m.support = gold;
    m.precision = predicted == 0 ? 0.0 : static_cast<double>(tp) / predicted;
    m.recall = gold == 0 ? 0.0 : static_cast<double>(tp) / gold;
    m.f1 = m.precision + m.recall == 0 ? 0.0
                                       : 2 * m.precision * m.recall / (m.precision + m.recall);
    r.precision_macro += m.precision / kNumLabels;
    r.recall_macro += m.recall / kNumLabels;
    r.f1_macro += m.f1 / kNumLabels;
    r.f1_weighted += m.f1 * static_cast<double>(gold) / n;
  }
  r.accuracy = static_cast<double>(correct) / n;
  return r;
}

}  // namespace np2io
