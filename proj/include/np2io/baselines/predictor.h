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

#ifndef NP2IO_BASELINES_PREDICTOR_H_
#define NP2IO_BASELINES_PREDICTOR_H_

#include <string>

#include "absl/status/statusor.h"
#include "np2io/corpus/example.h"

namespace np2io {

// A model under benchmark. Predict is non-const because seeded predictors
// advance their random stream; the gold label of `example` is never read.
class Predictor {
 public:
  virtual ~Predictor() = default;
  virtual std::string name() const = 0;
  virtual absl::StatusOr<Label> Predict(const LabeledExample& example) = 0;
};

}  // namespace np2io

#endif  // NP2IO_BASELINES_PREDICTOR_H_
