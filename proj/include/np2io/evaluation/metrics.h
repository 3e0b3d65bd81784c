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

#ifndef NP2IO_EVALUATION_METRICS_H_
#define NP2IO_EVALUATION_METRICS_H_

#include <array>
#include <vector>

#include "np2io/corpus/label.h"

namespace np2io {

struct ClassMetrics {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  long support = 0;  // gold count
};

struct MetricsReport {
  size_t count = 0;
  double accuracy = 0;
  double precision_macro = 0;
  double recall_macro = 0;
  double f1_macro = 0;
  double f1_weighted = 0;
  std::array<ClassMetrics, kNumLabels> per_class{};
  // confusion[gold][predicted]
  std::array<LabelCounts, kNumLabels> confusion{};
};

// Macro averages are unweighted means over all three classes; a class that
// is never predicted (or never gold) contributes 0 precision (or recall),
// and F1 is 0 whenever precision + recall is 0. Weighted F1 weights each
// class by its gold support. Throws ContractViolation on empty input or a
// length mismatch.
MetricsReport ComputeMetrics(const std::vector<Label>& predictions,
                             const std::vector<Label>& golds);

}  // namespace np2io

#endif  // NP2IO_EVALUATION_METRICS_H_
