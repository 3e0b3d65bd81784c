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

#ifndef NP2IO_BASELINES_SIMPLE_H_
#define NP2IO_BASELINES_SIMPLE_H_

#include "np2io/baselines/predictor.h"
#include "np2io/common/rng.h"

namespace np2io {

// RND: uniform over the three labels from its own seeded stream.
class RandomPredictor : public Predictor {
 public:
  explicit RandomPredictor(uint64_t seed) : rng_(seed) {}
  std::string name() const override { return "RND"; }
  absl::StatusOr<Label> Predict(const LabeledExample&) override { return Next(); }
  Label Next() { return LabelFromIndex(rng_.UniformIndex(kNumLabels)); }

 private:
  Rng rng_;
};

// DET-I / DET-O / DET-NA: one fixed label.
class ConstantPredictor : public Predictor {
 public:
  explicit ConstantPredictor(Label label) : label_(label) {}
  std::string name() const override;
  absl::StatusOr<Label> Predict(const LabeledExample&) override { return label_; }

 private:
  Label label_;
};

}  // namespace np2io

#endif  // NP2IO_BASELINES_SIMPLE_H_
