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

#ifndef NP2IO_CLASSIFIER_OPTIMIZER_H_
#define NP2IO_CLASSIFIER_OPTIMIZER_H_

#include <vector>

#include "np2io/classifier/network.h"

namespace np2io {

// Adam with bias correction and a constant learning rate.
template <typename S>
class Adam {
 public:
  explicit Adam(double learning_rate, double beta1 = 0.9, double beta2 = 0.999,
                double epsilon = 1e-8);

  // params[i] is updated from grads[i]; shapes must match pairwise.
  void Step(const std::vector<ParamView<S>>& params, const std::vector<ParamView<S>>& grads);
  long steps() const { return step_; }

 private:
  double lr_, beta1_, beta2_, eps_;
  long step_ = 0;
  std::vector<std::vector<S>> m_, v_;
};

}  // namespace np2io

#endif  // NP2IO_CLASSIFIER_OPTIMIZER_H_
