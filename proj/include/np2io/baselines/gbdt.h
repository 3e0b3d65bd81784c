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

#ifndef NP2IO_BASELINES_GBDT_H_
#define NP2IO_BASELINES_GBDT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace np2io {

// Multiclass gradient-boosted trees with the softmax objective, grown
// depth-wise over quantile-binned features. Defaults follow XGBoost's
// hist booster. Training has no sampling, so it is fully deterministic.
struct GbdtOptions {
  int rounds = 100;
  double eta = 0.3;
  int max_depth = 6;
  double lambda = 1.0;
  double gamma = 0.0;
  double min_child_weight = 1.0;
  int max_bins = 256;
  double base_score = 0.5;
};

struct GbdtNode {
  int32_t feature = -1;  // -1 marks a leaf
  float threshold = 0;   // x < threshold goes left
  int32_t left = -1;
  int32_t right = -1;
  double value = 0;  // leaf output, already scaled by eta
};

struct GbdtTree {
  std::vector<GbdtNode> nodes;  // nodes[0] is the root
  double Evaluate(const float* x) const;
};

class GbdtModel {
 public:
  int num_classes() const { return num_classes_; }
  size_t num_features() const { return num_features_; }
  // trees()[round][class]
  const std::vector<std::vector<GbdtTree>>& trees() const { return trees_; }
  // Set when training saw a single class; every prediction is that class.
  std::optional<int> constant_class() const { return constant_; }

  std::vector<double> Margins(const std::vector<float>& x) const;
  // Highest margin, lowest class index on ties.
  int Predict(const std::vector<float>& x) const;

 private:
  friend GbdtModel TrainGbdt(const std::vector<std::vector<float>>&, const std::vector<int>&,
                             int, const GbdtOptions&, std::vector<std::string>*);
  int num_classes_ = 0;
  size_t num_features_ = 0;
  double base_score_ = 0.5;
  std::vector<std::vector<GbdtTree>> trees_;
  std::optional<int> constant_;
};

// `labels` are in [0, num_classes). Throws ConfigError on empty or ragged
// input. A single-class training set yields a constant model and a warning.
GbdtModel TrainGbdt(const std::vector<std::vector<float>>& features,
                    const std::vector<int>& labels, int num_classes,
                    const GbdtOptions& options = {}, std::vector<std::string>* warnings = nullptr);

}  // namespace np2io

#endif  // NP2IO_BASELINES_GBDT_H_
